import { resolvePath } from "./paths.js";
import { validateResult } from "./schema.js";
import type { DiffResult, JsonValue } from "./types.js";

/** One row in the navigable list: an event or a pair. */
export interface NavigationTarget {
  kind: "event" | "pair";
  category: string; // event category, or "pair"
  leftPath: string | null; // null when the side does not apply
  rightPath: string | null;
  index: number; // position in the combined list
  score?: number;
  info?: JsonValue;
  left?: JsonValue;
  right?: JsonValue;
}

/**
 * Read-only view state over the two documents and their diff result.
 * The selection always references an entry of ``targets``; next/previous
 * wrap around both ends.
 */
export class ViewerSession {
  readonly left: JsonValue;
  readonly right: JsonValue;
  readonly result: DiffResult;
  readonly targets: NavigationTarget[];
  selection = -1;

  constructor(left: JsonValue, right: JsonValue, result: DiffResult) {
    this.left = left;
    this.right = right;
    this.result = result;
    this.targets = collectTargets(result);
    assertPathsResolve(this);
  }

  get eventCount(): number {
    return this.targets.filter((t) => t.kind === "event").length;
  }

  get pairCount(): number {
    return this.result.pairs.length;
  }

  select(index: number): NavigationTarget {
    if (index < 0 || index >= this.targets.length) {
      throw new Error(`selection ${index} out of range`);
    }
    this.selection = index;
    return this.targets[index];
  }

  next(): NavigationTarget | null {
    if (this.targets.length === 0) {
      return null;
    }
    return this.select((this.selection + 1) % this.targets.length);
  }

  previous(): NavigationTarget | null {
    if (this.targets.length === 0) {
      return null;
    }
    const size = this.targets.length;
    if (this.selection === -1) {
      return this.select(size - 1);
    }
    return this.select((this.selection - 1 + size) % size);
  }
}

function collectTargets(result: DiffResult): NavigationTarget[] {
  const targets: NavigationTarget[] = [];
  for (const category of Object.keys(result.events)) {
    for (const event of result.events[category]) {
      targets.push({
        kind: "event",
        category,
        leftPath: event.left_path === "" ? null : event.left_path,
        rightPath: event.right_path === "" ? null : event.right_path,
        index: targets.length,
        info: event.info,
        left: event.left,
        right: event.right,
      });
    }
  }
  for (const pair of result.pairs) {
    targets.push({
      kind: "pair",
      category: "pair",
      leftPath: pair.left_path,
      rightPath: pair.right_path,
      index: targets.length,
      score: pair.score,
    });
  }
  return targets;
}

function assertPathsResolve(session: ViewerSession): void {
  for (const target of session.targets) {
    const label = `${target.category}[${target.index}]`;
    if (target.leftPath !== null && !resolvePath(session.left, target.leftPath).found) {
      throw new Error(`${label}: left path ${JSON.stringify(target.leftPath)} does not resolve`);
    }
    if (target.rightPath !== null && !resolvePath(session.right, target.rightPath).found) {
      throw new Error(`${label}: right path ${JSON.stringify(target.rightPath)} does not resolve`);
    }
  }
}

/** Parse and validate the three inputs; throws before any state is
 * exposed, so a failed load renders nothing. */
export function loadSession(leftText: string, rightText: string, resultText: string): ViewerSession {
  let left: JsonValue;
  let right: JsonValue;
  let resultRaw: unknown;
  try {
    left = JSON.parse(leftText) as JsonValue;
  } catch (exc) {
    throw new Error(`left document: ${(exc as Error).message}`);
  }
  try {
    right = JSON.parse(rightText) as JsonValue;
  } catch (exc) {
    throw new Error(`right document: ${(exc as Error).message}`);
  }
  try {
    resultRaw = JSON.parse(resultText);
  } catch (exc) {
    throw new Error(`result document: ${(exc as Error).message}`);
  }
  return new ViewerSession(left, right, validateResult(resultRaw));
}
