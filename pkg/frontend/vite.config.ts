import { defineConfig } from "vite";

// The explorer is a pure client over the topology service; in development
// the service runs separately (`twobytwo serve`) and /api is proxied to it.
export default defineConfig({
  server: {
    proxy: {
      "/api": "http://127.0.0.1:8224",
    },
  },
  build: {
    outDir: "dist",
  },
});
