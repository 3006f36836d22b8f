import { readFileSync } from "node:fs";
import { dirname, join } from "node:path";
import { fileURLToPath } from "node:url";

import { beforeEach, describe, expect, it } from "vitest";

import { setupViewer, type ViewerApp } from "../src/app.js";
import { documentLines, windowAround, VIRTUALIZATION_THRESHOLD } from "../src/render.js";

const here = dirname(fileURLToPath(import.meta.url));
const FIXTURES = join(here, "..", "..", "tests", "fixtures");
const INDEX_HTML = readFileSync(join(here, "..", "index.html"), "utf-8");

const leftText = readFileSync(join(FIXTURES, "base.json"), "utf-8");
const rightText = readFileSync(join(FIXTURES, "changed.json"), "utf-8");
const resultText = readFileSync(join(FIXTURES, "golden_result.json"), "utf-8");
const golden = JSON.parse(resultText);

const GOLDEN_EVENT_COUNT = Object.values(golden.events as Record<string, unknown[]>).reduce(
  (total, group) => total + group.length,
  0,
);
const GOLDEN_PAIR_COUNT = (golden.pairs as unknown[]).length;

function mountViewer(): ViewerApp {
  document.documentElement.innerHTML = INDEX_HTML.replace(/<script[\s\S]*?<\/script>/, "");
  return setupViewer(document);
}

function highlightedPaths(paneId: string): string[] {
  return Array.from(
    document.querySelectorAll(`#${paneId} .line.highlight`),
    (el) => (el as HTMLElement).dataset.path ?? "",
  );
}

describe("viewer with the golden fixture", () => {
  let app: ViewerApp;

  beforeEach(() => {
    app = mountViewer();
    app.load(leftText, rightText, resultText);
  });

  it("loads both panes", () => {
    expect(document.querySelectorAll("#left-pane .line").length).toBeGreaterThan(0);
    expect(document.querySelectorAll("#right-pane .line").length).toBeGreaterThan(0);
  });

  it("lists the exact event and pair counts", () => {
    expect(document.querySelectorAll("#event-list .target")).toHaveLength(GOLDEN_EVENT_COUNT);
    expect(document.querySelectorAll("#pair-list .target")).toHaveLength(GOLDEN_PAIR_COUNT);
    expect(app.session?.eventCount).toBe(GOLDEN_EVENT_COUNT);
    expect(app.session?.pairCount).toBe(GOLDEN_PAIR_COUNT);
    const summary = document.getElementById("summary")!.textContent!;
    expect(summary).toContain(`${GOLDEN_EVENT_COUNT} events`);
    expect(summary).toContain(`${GOLDEN_PAIR_COUNT} pairs`);
  });

  it("navigating to each pair highlights the fixture's paths in both panes", () => {
    const session = app.session!;
    const pairTargets = session.targets.filter((t) => t.kind === "pair");
    expect(pairTargets).toHaveLength(GOLDEN_PAIR_COUNT);
    for (const [i, pair] of (golden.pairs as { left_path: string; right_path: string }[]).entries()) {
      app.selectTarget(pairTargets[i].index);
      expect(highlightedPaths("left-pane")).toEqual([pair.left_path]);
      expect(highlightedPaths("right-pane")).toEqual([pair.right_path]);
    }
  });

  it("one-sided events highlight only the existing side", () => {
    const session = app.session!;
    const added = session.targets.find((t) => t.category === "array:add")!;
    app.selectTarget(added.index);
    expect(highlightedPaths("left-pane")).toEqual([]);
    expect(highlightedPaths("right-pane")).toEqual(["tags->[1]"]);

    const removed = session.targets.find((t) => t.category === "array:remove")!;
    app.selectTarget(removed.index);
    expect(highlightedPaths("left-pane")).toEqual(["tags->[0]"]);
    expect(highlightedPaths("right-pane")).toEqual([]);
  });

  it("next from the last target wraps to the first", () => {
    const session = app.session!;
    app.selectTarget(session.targets.length - 1);
    app.next();
    expect(session.selection).toBe(0);
    app.previous();
    expect(session.selection).toBe(session.targets.length - 1);
  });

  it("stepping backwards from a fresh load starts at the last target", () => {
    const session = app.session!;
    app.previous();
    expect(session.selection).toBe(session.targets.length - 1);
  });

  it("keyboard shortcuts step the selection", () => {
    const session = app.session!;
    app.selectTarget(0);
    document.dispatchEvent(new KeyboardEvent("keydown", { key: "n" }));
    expect(session.selection).toBe(1);
    document.dispatchEvent(new KeyboardEvent("keydown", { key: "p" }));
    expect(session.selection).toBe(0);
  });

  it("selection marks the list row", () => {
    app.selectTarget(0);
    const selected = document.querySelectorAll(".target.selected");
    expect(selected).toHaveLength(1);
    expect((selected[0] as HTMLElement).dataset.index).toBe("0");
  });

  it("reloading the same inputs reproduces the same counts", () => {
    const again = mountViewer();
    again.load(leftText, rightText, resultText);
    expect(document.querySelectorAll("#event-list .target")).toHaveLength(GOLDEN_EVENT_COUNT);
    expect(document.querySelectorAll("#pair-list .target")).toHaveLength(GOLDEN_PAIR_COUNT);
  });
});

describe("viewer edge cases", () => {
  it("identity results show the identical banner and no events", () => {
    const app = mountViewer();
    const identity = JSON.stringify({
      similarity: 1,
      identical: true,
      events: {},
      pairs: [],
    });
    app.load(leftText, leftText, identity);
    const banner = document.getElementById("banner")!;
    expect(banner.hidden).toBe(false);
    expect(banner.textContent).toBe("identical");
    expect(document.querySelectorAll("#event-list .target")).toHaveLength(0);
  });

  it("a malformed result shows an error banner and renders no panes", () => {
    const app = mountViewer();
    app.load(leftText, rightText, '{"similarity": "high"}');
    const banner = document.getElementById("banner")!;
    expect(banner.hidden).toBe(false);
    expect(banner.textContent).toContain("similarity");
    expect(document.querySelectorAll("#left-pane .line")).toHaveLength(0);
    expect(document.querySelectorAll("#right-pane .line")).toHaveLength(0);
    expect(app.session).toBeNull();
  });

  it("a result path that does not resolve is rejected at load", () => {
    const app = mountViewer();
    const bad = JSON.stringify({
      similarity: 0.5,
      identical: false,
      events: {
        "value:change": [{ left_path: "no->such->node", right_path: "meta", left: 1, right: 2 }],
      },
      pairs: [],
    });
    app.load(leftText, rightText, bad);
    expect(document.getElementById("banner")!.textContent).toContain("no->such->node");
    expect(app.session).toBeNull();
  });

  it("unparsable documents are reported by side", () => {
    const app = mountViewer();
    app.load("{broken", rightText, '{"similarity":1,"identical":true,"events":{},"pairs":[]}');
    expect(document.getElementById("banner")!.textContent).toContain("left document");
  });
});

describe("virtualized rendering", () => {
  it("large documents render a window of lines, and navigation reaches deep nodes", () => {
    const big: Record<string, number[]> = {};
    for (let i = 0; i < 60; i++) {
      big[`key${String(i).padStart(2, "0")}`] = Array.from({ length: 120 }, (_, j) => j);
    }
    const lines = documentLines(big);
    expect(lines.length).toBeGreaterThan(VIRTUALIZATION_THRESHOLD);

    const app = mountViewer();
    const result = JSON.stringify({
      similarity: 0.99,
      identical: false,
      events: {
        "value:change": [
          { left_path: "key59->[119]", right_path: "key59->[119]", left: 119, right: 120 },
        ],
      },
      pairs: [],
    });
    const leftBig = JSON.stringify(big);
    const rightBig = JSON.stringify(big);
    app.load(leftBig, rightBig, result);

    const rendered = document.querySelectorAll("#left-pane .line").length;
    expect(rendered).toBeLessThan(lines.length);

    app.selectTarget(0);
    expect(highlightedPaths("left-pane")).toEqual(["key59->[119]"]);
  });

  it("small documents render every line", () => {
    expect(windowAround(100, 50)).toEqual({ start: 0, end: 100 });
  });
});
