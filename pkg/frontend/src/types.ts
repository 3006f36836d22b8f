export type JsonValue =
  | null
  | boolean
  | number
  | string
  | JsonValue[]
  | { [key: string]: JsonValue };

export interface DiffEvent {
  left_path: string;
  right_path: string;
  left: JsonValue;
  right: JsonValue;
  info?: JsonValue;
}

export interface PairRecord {
  left_path: string;
  right_path: string;
  score: number;
}

export interface DiffResult {
  similarity: number;
  identical: boolean;
  events: Record<string, DiffEvent[]>;
  pairs: PairRecord[];
}
