/** Typed views of the server's scene and cover dump lines.
 *
 * A scene line is `NAME KIND Z NODES ANGLE X Y W H`, optionally followed by
 * ` | ` and kind-specific defining values. A covers line is
 * `NAME NODE FREEDOM CURSOR circle cx cy r | strip x0 y0 x1 y1 r | poly n x y ...`.
 * Parsing never interprets the geometry; it only types the fields so the
 * renderer can draw them.
 */

export interface SceneEntry {
  name: string;
  kind: string;
  /** Queue position; 0 is the front-most object (picked first, drawn last). */
  z: number;
  nodes: number;
  angle: number;
  left: number;
  top: number;
  width: number;
  height: number;
  /** Raw defining-value tokens after the `|` separator; empty when absent. */
  extras: string[];
}

const HEAD_FIELDS = 9;

function num(token: string, line: string): number {
  const value = Number(token);
  if (token === "" || Number.isNaN(value)) {
    throw new Error(`not a number: ${token!} in: ${line}`);
  }
  return value;
}

export function parseSceneLine(line: string): SceneEntry {
  const sep = line.indexOf(" | ");
  const head = sep >= 0 ? line.slice(0, sep) : line;
  const tail = sep >= 0 ? line.slice(sep + 3) : "";
  const tokens = head.split(" ");
  if (tokens.length !== HEAD_FIELDS) {
    throw new Error(`scene line needs ${HEAD_FIELDS} fields, got ${tokens.length}: ${line}`);
  }
  return {
    name: tokens[0],
    kind: tokens[1],
    z: num(tokens[2], line),
    nodes: num(tokens[3], line),
    angle: num(tokens[4], line),
    left: num(tokens[5], line),
    top: num(tokens[6], line),
    width: num(tokens[7], line),
    height: num(tokens[8], line),
    extras: tail === "" ? [] : tail.split(" "),
  };
}

/** Parse a whole scene block, front-most entry first (as sent). */
export function parseScene(lines: string[]): SceneEntry[] {
  return lines.map(parseSceneLine);
}

export interface PointXY {
  x: number;
  y: number;
}

export type CoverShape =
  | { kind: "circle"; cx: number; cy: number; r: number }
  | { kind: "strip"; x0: number; y0: number; x1: number; y1: number; r: number }
  | { kind: "poly"; points: PointXY[] };

export interface CoverNodeView {
  name: string;
  nodeId: number;
  freedom: string;
  cursor: string;
  shape: CoverShape;
}

export function parseCoverLine(line: string): CoverNodeView {
  const tokens = line.split(" ");
  if (tokens.length < 5) {
    throw new Error(`cover line too short: ${line}`);
  }
  const [name, nodeToken, freedom, cursor, shapeKind, ...rest] = tokens;
  const nodeId = num(nodeToken, line);
  let shape: CoverShape;
  if (shapeKind === "circle" && rest.length === 3) {
    shape = { kind: "circle", cx: num(rest[0], line), cy: num(rest[1], line), r: num(rest[2], line) };
  } else if (shapeKind === "strip" && rest.length === 5) {
    shape = {
      kind: "strip",
      x0: num(rest[0], line),
      y0: num(rest[1], line),
      x1: num(rest[2], line),
      y1: num(rest[3], line),
      r: num(rest[4], line),
    };
  } else if (shapeKind === "poly" && rest.length >= 1) {
    const count = num(rest[0], line);
    if (rest.length !== 1 + 2 * count) {
      throw new Error(`poly cover wants ${count} points: ${line}`);
    }
    const points: PointXY[] = [];
    for (let i = 1; i < rest.length; i += 2) {
      points.push({ x: num(rest[i], line), y: num(rest[i + 1], line) });
    }
    shape = { kind: "poly", points };
  } else {
    throw new Error(`unknown cover shape: ${line}`);
  }
  return { name, nodeId, freedom, cursor, shape };
}

export function parseCovers(lines: string[]): CoverNodeView[] {
  return lines.map(parseCoverLine);
}
