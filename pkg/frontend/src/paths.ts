import type { JsonValue } from "./types.js";

export type Segment = string | number;

const INDEX_TOKEN = /^\[(\d+)\]$/;

/** Parse an arrow-notation path ("items->[2]->name") into segments. */
export function parsePath(rendered: string): Segment[] {
  if (rendered === "") {
    return [];
  }
  return rendered.split("->").map((part) => {
    if (part === "") {
      throw new Error(`empty segment in path ${JSON.stringify(rendered)}`);
    }
    const match = INDEX_TOKEN.exec(part);
    return match ? Number(match[1]) : part;
  });
}

export function renderPath(segments: Segment[]): string {
  return segments.map((seg) => (typeof seg === "number" ? `[${seg}]` : seg)).join("->");
}

export type Resolution = { found: true; value: JsonValue } | { found: false };

/** Follow a rendered path through a document; the root path is "". */
export function resolvePath(doc: JsonValue, rendered: string): Resolution {
  let current: JsonValue = doc;
  for (const segment of parsePath(rendered)) {
    if (typeof segment === "number") {
      if (!Array.isArray(current) || segment >= current.length) {
        return { found: false };
      }
      current = current[segment];
    } else {
      if (
        current === null ||
        typeof current !== "object" ||
        Array.isArray(current) ||
        !(segment in current)
      ) {
        return { found: false };
      }
      current = (current as { [key: string]: JsonValue })[segment];
    }
  }
  return { found: true, value: current };
}
