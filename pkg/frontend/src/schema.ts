import type { DiffEvent, DiffResult, PairRecord } from "./types.js";

/** Raised when a result document does not match the diff-result schema;
 * the message names the offending field. */
export class SchemaError extends Error {}

function fail(field: string, expected: string): never {
  throw new SchemaError(`result field ${field}: expected ${expected}`);
}

function checkEvent(value: unknown, field: string): DiffEvent {
  if (value === null || typeof value !== "object" || Array.isArray(value)) {
    fail(field, "an event object");
  }
  const event = value as Record<string, unknown>;
  if (typeof event.left_path !== "string") {
    fail(`${field}.left_path`, "a string");
  }
  if (typeof event.right_path !== "string") {
    fail(`${field}.right_path`, "a string");
  }
  if (!("left" in event)) {
    fail(`${field}.left`, "a JSON value");
  }
  if (!("right" in event)) {
    fail(`${field}.right`, "a JSON value");
  }
  return event as unknown as DiffEvent;
}

function checkPair(value: unknown, field: string): PairRecord {
  if (value === null || typeof value !== "object" || Array.isArray(value)) {
    fail(field, "a pair object");
  }
  const pair = value as Record<string, unknown>;
  if (typeof pair.left_path !== "string") {
    fail(`${field}.left_path`, "a string");
  }
  if (typeof pair.right_path !== "string") {
    fail(`${field}.right_path`, "a string");
  }
  if (typeof pair.score !== "number" || Number.isNaN(pair.score)) {
    fail(`${field}.score`, "a number");
  }
  return pair as unknown as PairRecord;
}

/** Validate a parsed result document, returning it typed. */
export function validateResult(value: unknown): DiffResult {
  if (value === null || typeof value !== "object" || Array.isArray(value)) {
    fail("<root>", "an object");
  }
  const result = value as Record<string, unknown>;
  if (typeof result.similarity !== "number" || result.similarity < 0 || result.similarity > 1) {
    fail("similarity", "a number in [0, 1]");
  }
  if (typeof result.identical !== "boolean") {
    fail("identical", "a boolean");
  }
  if (result.events === null || typeof result.events !== "object" || Array.isArray(result.events)) {
    fail("events", "an object of event arrays");
  }
  for (const [category, group] of Object.entries(result.events as object)) {
    if (!Array.isArray(group)) {
      fail(`events.${category}`, "an array");
    }
    group.forEach((event, i) => checkEvent(event, `events.${category}[${i}]`));
  }
  if (!Array.isArray(result.pairs)) {
    fail("pairs", "an array");
  }
  (result.pairs as unknown[]).forEach((pair, i) => checkPair(pair, `pairs[${i}]`));
  return result as unknown as DiffResult;
}
