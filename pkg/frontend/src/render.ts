import { renderPath, type Segment } from "./paths.js";
import type { JsonValue } from "./types.js";

/** One display line of a pretty-printed document.  ``path`` is the
 * rendered path of the node the line opens (null on closing brackets). */
export interface DocLine {
  text: string;
  path: string | null;
}

const INDENT = "  ";

export function documentLines(doc: JsonValue): DocLine[] {
  const lines: DocLine[] = [];

  function emit(value: JsonValue, segments: Segment[], prefix: string, depth: number, comma: string): void {
    const pad = INDENT.repeat(depth);
    const path = renderPath(segments);
    if (Array.isArray(value)) {
      if (value.length === 0) {
        lines.push({ text: `${pad}${prefix}[]${comma}`, path });
        return;
      }
      lines.push({ text: `${pad}${prefix}[`, path });
      value.forEach((item, i) => {
        emit(item, [...segments, i], "", depth + 1, i < value.length - 1 ? "," : "");
      });
      lines.push({ text: `${pad}]${comma}`, path: null });
      return;
    }
    if (value !== null && typeof value === "object") {
      const entries = Object.entries(value);
      if (entries.length === 0) {
        lines.push({ text: `${pad}${prefix}{}${comma}`, path });
        return;
      }
      lines.push({ text: `${pad}${prefix}{`, path });
      entries.forEach(([key, child], i) => {
        emit(
          child,
          [...segments, key],
          `${JSON.stringify(key)}: `,
          depth + 1,
          i < entries.length - 1 ? "," : "",
        );
      });
      lines.push({ text: `${pad}}${comma}`, path: null });
      return;
    }
    lines.push({ text: `${pad}${prefix}${JSON.stringify(value)}${comma}`, path });
  }

  emit(doc, [], "", 0, "");
  return lines;
}

/** First line number per rendered path. */
export function buildLineIndex(lines: DocLine[]): Map<string, number> {
  const index = new Map<string, number>();
  lines.forEach((line, i) => {
    if (line.path !== null && !index.has(line.path)) {
      index.set(line.path, i);
    }
  });
  return index;
}

/** Panes render everything up to this many lines; beyond it only a
 * window around the focused line goes into the DOM. */
export const VIRTUALIZATION_THRESHOLD = 5000;
export const WINDOW_RADIUS = 250;

export interface LineWindow {
  start: number;
  end: number; // exclusive
}

export function windowAround(total: number, focus: number): LineWindow {
  if (total <= VIRTUALIZATION_THRESHOLD) {
    return { start: 0, end: total };
  }
  const start = Math.max(0, focus - WINDOW_RADIUS);
  const end = Math.min(total, focus + WINDOW_RADIUS + 1);
  return { start, end };
}
