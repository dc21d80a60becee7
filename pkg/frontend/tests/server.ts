// Helpers for integration tests: generate datasets with the CLI and run the
// real analysis service as a child process.

import { spawn, spawnSync, type ChildProcess } from "node:child_process";
import { mkdtempSync, writeFileSync } from "node:fs";
import { createServer } from "node:net";
import { tmpdir } from "node:os";
import { join, resolve } from "node:path";

const REPO_ROOT = resolve(__dirname, "..", "..");
const PYTHON = process.env.PYTHON ?? "python3";

export function scratchDir(prefix: string): string {
  return mkdtempSync(join(tmpdir(), prefix));
}

export function synthParabola(dir: string, n = 64): string {
  const result = spawnSync(
    PYTHON,
    ["-m", "discrep.cli", "synth", "parabola", "--n", String(n), "--out", dir],
    { cwd: REPO_ROOT, encoding: "utf8" },
  );
  if (result.status !== 0) throw new Error(`synth failed: ${result.stderr}`);
  return join(dir, "manifest.json");
}

/** A 48-case, 3-space dataset shaped like a regionalization/kernel study. */
export function writeStudyShapedDataset(dir: string, cases = 48): string {
  const locations = 25;
  const caseList = [];
  const regionalizations: number[][] = [];
  const kernels: { inner: number; outer: number; units: string }[] = [];
  const grids: { rows: number; cols: number; values: number[] }[] = [];
  for (let k = 0; k < cases; k++) {
    caseList.push({ id: `s${String(k).padStart(2, "0")}`, label: `setting ${k}`, tags: {} });
    // slice the 5x5 location grid into 2-4 horizontal or vertical bands
    const bands = 2 + (k % 3);
    const vertical = k % 2 === 0;
    const labels: number[] = [];
    for (let loc = 0; loc < locations; loc++) {
      const row = Math.floor(loc / 5);
      const col = loc % 5;
      labels.push(Math.floor(((vertical ? col : row) * bands) / 5));
    }
    regionalizations.push(labels);
    kernels.push({ inner: (k % 4) * 10, outer: (k % 4) * 10 + 20 + (k % 5) * 10, units: "km" });
    const values: number[] = [];
    for (let cell = 0; cell < 16; cell++) {
      values.push(Math.sin(cell * 0.7 + k * 0.31) + 0.05 * k);
    }
    grids.push({ rows: 4, cols: 4, values });
  }
  const manifest = {
    name: "study-shaped",
    cases: caseList,
    spaces: [
      {
        name: "R",
        kind: "parameter",
        payloadType: "regionalization",
        payloads: regionalizations,
        distance: { kind: "builtin", measure: "regionPairCount" },
      },
      {
        name: "K",
        kind: "parameter",
        payloadType: "ringKernel",
        payloads: kernels,
        distance: { kind: "builtin", measure: "ringKernelParam" },
      },
      {
        name: "W",
        kind: "output",
        payloadType: "grid2d",
        payloads: grids,
        distance: { kind: "builtin", measure: "euclidean" },
      },
    ],
  };
  const path = join(dir, "manifest.json");
  writeFileSync(path, JSON.stringify(manifest));
  return path;
}

async function freePort(): Promise<number> {
  return new Promise((resolvePort, reject) => {
    const probe = createServer();
    probe.once("error", reject);
    probe.listen(0, "127.0.0.1", () => {
      const address = probe.address();
      if (address === null || typeof address === "string") {
        reject(new Error("no port"));
        return;
      }
      probe.close(() => resolvePort(address.port));
    });
  });
}

export interface RunningService {
  base: string;
  stop: () => Promise<void>;
}

export async function startService(manifest: string): Promise<RunningService> {
  const port = await freePort();
  const child: ChildProcess = spawn(
    PYTHON,
    ["-m", "discrep.cli", "serve", manifest, "--port", String(port)],
    { cwd: REPO_ROOT, stdio: ["ignore", "pipe", "pipe"] },
  );
  let stderr = "";
  child.stderr?.on("data", (chunk) => (stderr += String(chunk)));
  const base = `http://127.0.0.1:${port}`;
  const deadline = Date.now() + 30000;
  for (;;) {
    if (child.exitCode !== null) throw new Error(`service exited: ${stderr}`);
    try {
      const response = await fetch(`${base}/api/dataset`);
      if (response.ok) break;
    } catch {
      // not up yet
    }
    if (Date.now() > deadline) {
      child.kill();
      throw new Error(`service never came up: ${stderr}`);
    }
    await new Promise((r) => setTimeout(r, 100));
  }
  return {
    base,
    stop: () =>
      new Promise((resolveStop) => {
        child.once("exit", () => resolveStop());
        child.kill("SIGTERM");
        setTimeout(() => child.kill("SIGKILL"), 5000).unref();
      }),
  };
}

export async function waitFor(check: () => boolean, timeoutMs = 10000): Promise<void> {
  const deadline = Date.now() + timeoutMs;
  while (!check()) {
    if (Date.now() > deadline) throw new Error("condition never became true");
    await new Promise((r) => setTimeout(r, 25));
  }
}
