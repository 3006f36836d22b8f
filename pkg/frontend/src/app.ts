import { buildLineIndex, documentLines, windowAround, type DocLine } from "./render.js";
import { loadSession, type NavigationTarget, type ViewerSession } from "./session.js";
import { categoryColor, resolveTheme, type Theme } from "./theme.js";

interface Pane {
  container: HTMLElement;
  lines: DocLine[];
  lineIndex: Map<string, number>;
  focus: number;
}

export interface ViewerApp {
  load(leftText: string, rightText: string, resultText: string): void;
  readonly session: ViewerSession | null;
  selectTarget(index: number): void;
  next(): void;
  previous(): void;
}

function byId<T extends HTMLElement>(doc: Document, id: string): T {
  const element = doc.getElementById(id);
  if (!element) {
    throw new Error(`missing required element #${id}`);
  }
  return element as T;
}

export function setupViewer(doc: Document): ViewerApp {
  const theme = resolveTheme();
  const banner = byId<HTMLElement>(doc, "banner");
  const summary = byId<HTMLElement>(doc, "summary");
  const eventList = byId<HTMLElement>(doc, "event-list");
  const pairList = byId<HTMLElement>(doc, "pair-list");
  const leftContainer = byId<HTMLElement>(doc, "left-pane");
  const rightContainer = byId<HTMLElement>(doc, "right-pane");

  let session: ViewerSession | null = null;
  let leftPane: Pane | null = null;
  let rightPane: Pane | null = null;

  function showError(message: string): void {
    session = null;
    leftPane = null;
    rightPane = null;
    for (const el of [summary, eventList, pairList, leftContainer, rightContainer]) {
      el.textContent = "";
    }
    banner.textContent = message;
    banner.className = "banner error";
    banner.hidden = false;
  }

  function makePane(container: HTMLElement, value: unknown): Pane {
    const lines = documentLines(value as never);
    return { container, lines, lineIndex: buildLineIndex(lines), focus: 0 };
  }

  function renderPane(pane: Pane, highlights: Set<number>): void {
    pane.container.textContent = "";
    const view = windowAround(pane.lines.length, pane.focus);
    if (view.start > 0) {
      const gap = doc.createElement("div");
      gap.className = "gap";
      gap.textContent = `… ${view.start} lines`;
      pane.container.appendChild(gap);
    }
    for (let i = view.start; i < view.end; i++) {
      const line = pane.lines[i];
      const row = doc.createElement("div");
      row.className = "line" + (highlights.has(i) ? " highlight" : "");
      if (line.path !== null) {
        row.dataset.path = line.path;
      }
      row.dataset.line = String(i);
      const number = doc.createElement("span");
      number.className = "line-number";
      number.textContent = String(i + 1);
      const text = doc.createElement("span");
      text.className = "line-text";
      text.textContent = line.text;
      row.append(number, text);
      pane.container.appendChild(row);
    }
    if (view.end < pane.lines.length) {
      const gap = doc.createElement("div");
      gap.className = "gap";
      gap.textContent = `… ${pane.lines.length - view.end} lines`;
      pane.container.appendChild(gap);
    }
  }

  function highlightPane(pane: Pane, path: string | null): void {
    const marks = new Set<number>();
    if (path !== null) {
      const lineNo = pane.lineIndex.get(path);
      if (lineNo !== undefined) {
        pane.focus = lineNo;
        marks.add(lineNo);
      }
    }
    renderPane(pane, marks);
    if (marks.size > 0) {
      const target = pane.container.querySelector(".highlight");
      if (target && "scrollIntoView" in target) {
        (target as HTMLElement).scrollIntoView({ block: "center" });
      }
    }
  }

  function renderLists(): void {
    eventList.textContent = "";
    pairList.textContent = "";
    if (!session) {
      return;
    }
    for (const target of session.targets) {
      const row = doc.createElement("li");
      row.className = "target" + (target.index === session.selection ? " selected" : "");
      row.dataset.index = String(target.index);
      if (target.kind === "event") {
        const chip = doc.createElement("span");
        chip.className = "chip";
        chip.style.background = categoryColor(target.category, theme);
        chip.textContent = target.category;
        const label = doc.createElement("span");
        label.textContent = ` ${target.leftPath ?? target.rightPath ?? ""}`;
        row.append(chip, label);
        if (target.info !== undefined) {
          const info = doc.createElement("pre");
          info.className = "info";
          info.textContent = JSON.stringify(target.info, null, 2);
          row.appendChild(info);
        }
        eventList.appendChild(row);
      } else {
        const score = doc.createElement("span");
        score.className = "score";
        score.textContent = (target.score ?? 0).toFixed(3);
        const label = doc.createElement("span");
        label.textContent = ` ${target.leftPath} ↔ ${target.rightPath}`;
        row.append(score, label);
        pairList.appendChild(row);
      }
      row.addEventListener("click", () => selectTarget(target.index));
    }
  }

  function applySelection(target: NavigationTarget): void {
    if (leftPane) {
      highlightPane(leftPane, target.leftPath);
    }
    if (rightPane) {
      highlightPane(rightPane, target.rightPath);
    }
    renderLists();
  }

  function selectTarget(index: number): void {
    if (!session) {
      return;
    }
    applySelection(session.select(index));
  }

  function step(direction: 1 | -1): void {
    if (!session) {
      return;
    }
    const target = direction === 1 ? session.next() : session.previous();
    if (target) {
      applySelection(target);
    }
  }

  function load(leftText: string, rightText: string, resultText: string): void {
    let loaded: ViewerSession;
    try {
      loaded = loadSession(leftText, rightText, resultText);
    } catch (exc) {
      showError((exc as Error).message);
      return;
    }
    session = loaded;
    leftPane = makePane(leftContainer, loaded.left);
    rightPane = makePane(rightContainer, loaded.right);
    banner.hidden = !loaded.result.identical;
    banner.className = "banner identical";
    banner.textContent = loaded.result.identical ? "identical" : "";
    summary.textContent =
      `similarity ${loaded.result.similarity.toFixed(3)} — ` +
      `${loaded.eventCount} events, ${loaded.pairCount} pairs`;
    renderPane(leftPane, new Set());
    renderPane(rightPane, new Set());
    renderLists();
  }

  doc.addEventListener("keydown", (raw) => {
    const event = raw as KeyboardEvent;
    if (event.key === "n" || event.key === "ArrowDown") {
      step(1);
      event.preventDefault();
    } else if (event.key === "p" || event.key === "ArrowUp") {
      step(-1);
      event.preventDefault();
    }
  });

  return {
    load,
    get session() {
      return session;
    },
    selectTarget,
    next: () => step(1),
    previous: () => step(-1),
  };
}
