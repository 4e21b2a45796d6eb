import { defineConfig } from "vitest/config";

export default defineConfig({
  // assets are served at / by the langscore service, possibly under a
  // different origin during development
  base: "./",
  build: {
    outDir: "dist",
    emptyOutDir: true,
  },
  server: {
    // during `vite dev`, proxy API calls to a locally running service
    proxy: {
      "/api": "http://127.0.0.1:8099",
    },
  },
  test: {
    environment: "node",
    include: ["tests/**/*.test.ts"],
    testTimeout: 30000,
    hookTimeout: 30000,
  },
});
