import { defineConfig } from "vitest/config";

export default defineConfig({
  test: {
    environment: "jsdom",
    globals: true,
    include: ["tests/**/*.test.ts"],
    // the contract suite boots a real service instance
    testTimeout: 30_000,
    hookTimeout: 60_000,
  },
});
