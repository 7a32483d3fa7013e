/** Canvas painting for scene dumps and cover geometry.
 *
 * The scene block lists objects front-most first, so the painter walks it
 * backwards: the entry at queue position 0 is drawn last and lands on top.
 * Everything here is presentation only — positions, sizes, and angles come
 * straight from the parsed server lines and are never modified.
 */

import type { CoverNodeView, SceneEntry } from "./scene.js";

/** The drawing surface the renderer needs (a structural slice of 2D canvas). */
export type Draw2D = Pick<
  CanvasRenderingContext2D,
  | "save"
  | "restore"
  | "translate"
  | "rotate"
  | "beginPath"
  | "moveTo"
  | "lineTo"
  | "closePath"
  | "arc"
  | "rect"
  | "fill"
  | "stroke"
  | "fillRect"
  | "strokeRect"
  | "clearRect"
  | "fillText"
  | "setLineDash"
  | "fillStyle"
  | "strokeStyle"
  | "lineWidth"
  | "lineCap"
  | "font"
  | "textAlign"
  | "textBaseline"
  | "globalAlpha"
>;

export const BACKGROUND = "#f6f4ef";
const OUTLINE = "rgba(40, 40, 46, 0.8)";
const TEXT_COLOR = "#24242a";
const LABEL_FONT = "12px system-ui, sans-serif";

/** Deterministic per-name fill color, stable across frames and sessions. */
export function colorFor(name: string): string {
  let h = 0;
  for (let i = 0; i < name.length; i += 1) {
    h = (h * 131 + name.charCodeAt(i)) >>> 0;
  }
  return `hsl(${h % 360}, 62%, 58%)`;
}

function numbers(tokens: string[], start: number, count: number): number[] | null {
  if (tokens.length < start + count) {
    return null;
  }
  const out: number[] = [];
  for (let i = start; i < start + count; i += 1) {
    const value = Number(tokens[i]);
    if (Number.isNaN(value)) {
      return null;
    }
    out.push(value);
  }
  return out;
}

function capsulePath(ctx: Draw2D, x0: number, y0: number, x1: number, y1: number, r: number): void {
  const theta = Math.atan2(y1 - y0, x1 - x0);
  ctx.beginPath();
  ctx.arc(x0, y0, r, theta + Math.PI / 2, theta - Math.PI / 2);
  ctx.arc(x1, y1, r, theta - Math.PI / 2, theta + Math.PI / 2);
  ctx.closePath();
}

function regularPolygonPath(ctx: Draw2D, cx: number, cy: number, r: number, n: number, angle: number): void {
  for (let i = 0; i < n; i += 1) {
    const a = angle + (2 * Math.PI * i) / n;
    const x = cx + r * Math.cos(a);
    const y = cy + r * Math.sin(a);
    if (i === 0) {
      ctx.moveTo(x, y);
    } else {
      ctx.lineTo(x, y);
    }
  }
  ctx.closePath();
}

function fillAndStroke(ctx: Draw2D, rule?: CanvasFillRule): void {
  if (rule === undefined) {
    ctx.fill();
  } else {
    ctx.fill(rule);
  }
  ctx.stroke();
}

function boundsFallback(ctx: Draw2D, e: SceneEntry): void {
  ctx.strokeRect(e.left, e.top, e.width, e.height);
  drawName(ctx, e.name, e.left + e.width / 2, e.top + e.height / 2, 0);
}

function drawName(ctx: Draw2D, text: string, cx: number, cy: number, angle: number): void {
  ctx.save();
  ctx.fillStyle = TEXT_COLOR;
  ctx.font = LABEL_FONT;
  ctx.textAlign = "center";
  ctx.textBaseline = "middle";
  ctx.translate(cx, cy);
  if (angle !== 0) {
    ctx.rotate(angle);
  }
  ctx.fillText(text, 0, 0);
  ctx.restore();
}

function paintRect(ctx: Draw2D, e: SceneEntry): void {
  ctx.fillRect(e.left, e.top, e.width, e.height);
  ctx.strokeRect(e.left, e.top, e.width, e.height);
}

function paintWidget(ctx: Draw2D, e: SceneEntry): void {
  ctx.fillRect(e.left, e.top, e.width, e.height);
  ctx.lineWidth = 3;
  ctx.strokeRect(e.left, e.top, e.width, e.height);
  ctx.lineWidth = 1.5;
  drawName(ctx, e.name, e.left + e.width / 2, e.top + e.height / 2, 0);
}

function paintHoles(ctx: Draw2D, e: SceneEntry): void {
  const tokens = e.extras;
  const count = Number(tokens[0] ?? "");
  if (Number.isNaN(count)) {
    boundsFallback(ctx, e);
    return;
  }
  ctx.beginPath();
  ctx.rect(e.left, e.top, e.width, e.height);
  let i = 1;
  for (let hole = 0; hole < count; hole += 1) {
    const tag = tokens[i];
    if (tag === "C") {
      const v = numbers(tokens, i + 1, 3);
      if (v === null) {
        break;
      }
      ctx.moveTo(v[0] + v[2], v[1]);
      ctx.arc(v[0], v[1], v[2], 0, 2 * Math.PI);
      i += 4;
    } else if (tag === "P") {
      const n = Number(tokens[i + 1] ?? "");
      const v = Number.isNaN(n) ? null : numbers(tokens, i + 2, 2 * n);
      if (v === null) {
        break;
      }
      for (let k = 0; k < n; k += 1) {
        if (k === 0) {
          ctx.moveTo(v[0], v[1]);
        } else {
          ctx.lineTo(v[2 * k], v[2 * k + 1]);
        }
      }
      ctx.closePath();
      i += 2 + 2 * n;
    } else {
      break;
    }
  }
  fillAndStroke(ctx, "evenodd");
}

function paintCircleEntry(ctx: Draw2D, e: SceneEntry): void {
  const v = numbers(e.extras, 0, 3);
  if (v === null) {
    boundsFallback(ctx, e);
    return;
  }
  ctx.beginPath();
  ctx.arc(v[0], v[1], v[2], 0, 2 * Math.PI);
  fillAndStroke(ctx);
}

function paintStripEntry(ctx: Draw2D, e: SceneEntry): void {
  const v = numbers(e.extras, 0, 5);
  if (v === null) {
    boundsFallback(ctx, e);
    return;
  }
  capsulePath(ctx, v[0], v[1], v[2], v[3], v[4]);
  fillAndStroke(ctx);
}

function paintRegularPolygon(ctx: Draw2D, e: SceneEntry): void {
  const v = numbers(e.extras, 0, 4);
  if (v === null) {
    boundsFallback(ctx, e);
    return;
  }
  ctx.beginPath();
  regularPolygonPath(ctx, v[0], v[1], v[2], v[3], e.angle);
  fillAndStroke(ctx);
}

function paintPerforated(ctx: Draw2D, e: SceneEntry): void {
  const v = numbers(e.extras, 0, 5);
  if (v === null) {
    boundsFallback(ctx, e);
    return;
  }
  ctx.beginPath();
  regularPolygonPath(ctx, v[0], v[1], v[3], v[4], e.angle);
  regularPolygonPath(ctx, v[0], v[1], v[2], v[4], e.angle);
  fillAndStroke(ctx, "evenodd");
}

function paintChatoyant(ctx: Draw2D, e: SceneEntry): void {
  const pairCount = (e.extras.length - 2) / 2;
  const v = Number.isInteger(pairCount) && pairCount >= 3 ? numbers(e.extras, 2, 2 * pairCount) : null;
  if (v === null) {
    boundsFallback(ctx, e);
    return;
  }
  ctx.beginPath();
  for (let i = 0; i < pairCount; i += 1) {
    if (i === 0) {
      ctx.moveTo(v[0], v[1]);
    } else {
      ctx.lineTo(v[2 * i], v[2 * i + 1]);
    }
  }
  ctx.closePath();
  fillAndStroke(ctx);
}

function paintRing(ctx: Draw2D, e: SceneEntry): void {
  const v = numbers(e.extras, 0, 4);
  if (v === null) {
    boundsFallback(ctx, e);
    return;
  }
  ctx.beginPath();
  ctx.arc(v[0], v[1], v[3], 0, 2 * Math.PI);
  ctx.moveTo(v[0] + v[2], v[1]);
  ctx.arc(v[0], v[1], v[2], 0, 2 * Math.PI);
  fillAndStroke(ctx, "evenodd");
}

function paintCircleInPoly(ctx: Draw2D, e: SceneEntry): void {
  const v = numbers(e.extras, 0, 7);
  if (v === null) {
    boundsFallback(ctx, e);
    return;
  }
  ctx.beginPath();
  regularPolygonPath(ctx, v[0], v[1], v[2], v[3], e.angle);
  ctx.moveTo(v[4] + v[6], v[5]);
  ctx.arc(v[4], v[5], v[6], 0, 2 * Math.PI);
  fillAndStroke(ctx, "evenodd");
}

function paintText(ctx: Draw2D, e: SceneEntry): void {
  const v = numbers(e.extras, 0, 2);
  if (v === null) {
    boundsFallback(ctx, e);
    return;
  }
  if (e.angle === 0) {
    ctx.strokeRect(e.left, e.top, e.width, e.height);
  }
  drawName(ctx, e.name, v[0], v[1], e.angle);
}

function paintMemberRects(ctx: Draw2D, e: SceneEntry): void {
  const count = Number(e.extras[0] ?? "");
  const v = Number.isNaN(count) ? null : numbers(e.extras, 1, 4 * count);
  ctx.strokeRect(e.left, e.top, e.width, e.height);
  if (v === null) {
    return;
  }
  for (let i = 0; i < count; i += 1) {
    ctx.fillRect(v[4 * i], v[4 * i + 1], v[4 * i + 2], v[4 * i + 3]);
    ctx.strokeRect(v[4 * i], v[4 * i + 1], v[4 * i + 2], v[4 * i + 3]);
  }
  drawName(ctx, e.name, e.left + e.width / 2, e.top - 8, 0);
}

function paintDashedFrame(ctx: Draw2D, e: SceneEntry, withName: boolean): void {
  ctx.save();
  ctx.setLineDash([6, 4]);
  ctx.strokeRect(e.left, e.top, e.width, e.height);
  ctx.restore();
  if (withName) {
    drawName(ctx, e.name, e.left + e.width / 2, e.top - 8, 0);
  }
}

function paintEntry(ctx: Draw2D, e: SceneEntry): void {
  ctx.fillStyle = colorFor(e.name);
  ctx.strokeStyle = OUTLINE;
  ctx.lineWidth = 1.5;
  ctx.lineCap = "round";
  switch (e.kind) {
    case "rect":
    case "rectc":
    case "primrect":
      paintRect(ctx, e);
      break;
    case "widget":
      paintWidget(ctx, e);
      break;
    case "holes":
      paintHoles(ctx, e);
      break;
    case "primcircle":
    case "circle":
      paintCircleEntry(ctx, e);
      break;
    case "primstrip":
    case "strip":
      paintStripEntry(ctx, e);
      break;
    case "polygon":
      paintRegularPolygon(ctx, e);
      break;
    case "perforated":
      paintPerforated(ctx, e);
      break;
    case "chatoyant":
      paintChatoyant(ctx, e);
      break;
    case "ring":
      paintRing(ctx, e);
      break;
    case "circleinpoly":
      paintCircleInPoly(ctx, e);
      break;
    case "label":
    case "comment":
      paintText(ctx, e);
      break;
    case "linked":
    case "group":
      paintMemberRects(ctx, e);
      break;
    case "elastic":
      paintDashedFrame(ctx, e, true);
      break;
    case "selframe":
      paintDashedFrame(ctx, e, false);
      break;
    default:
      boundsFallback(ctx, e);
      break;
  }
}

/** Paint a parsed scene block; entries arrive front-most first. */
export function drawScene(ctx: Draw2D, entries: SceneEntry[], width: number, height: number): void {
  ctx.clearRect(0, 0, width, height);
  ctx.fillStyle = BACKGROUND;
  ctx.fillRect(0, 0, width, height);
  for (let i = entries.length - 1; i >= 0; i -= 1) {
    paintEntry(ctx, entries[i]);
  }
}

const FREEDOM_FILL: Record<string, string> = {
  all: "rgba(46, 160, 67, 0.26)",
  ns: "rgba(9, 105, 218, 0.26)",
  we: "rgba(9, 105, 218, 0.26)",
  none: "rgba(110, 110, 110, 0.26)",
  transparent: "rgba(250, 153, 12, 0.24)",
  freeze: "rgba(207, 34, 46, 0.26)",
};

const FREEDOM_STROKE: Record<string, string> = {
  all: "rgb(36, 125, 52)",
  ns: "rgb(7, 82, 170)",
  we: "rgb(7, 82, 170)",
  none: "rgb(90, 90, 90)",
  transparent: "rgb(196, 120, 9)",
  freeze: "rgb(163, 26, 36)",
};

/** Overlay for a parsed covers block: filled node areas plus perimeters. */
export function drawCovers(ctx: Draw2D, nodes: CoverNodeView[]): void {
  for (const node of nodes) {
    ctx.fillStyle = FREEDOM_FILL[node.freedom] ?? "rgba(0, 0, 0, 0.2)";
    ctx.strokeStyle = FREEDOM_STROKE[node.freedom] ?? "rgb(0, 0, 0)";
    ctx.lineWidth = 1;
    const shape = node.shape;
    if (shape.kind === "circle") {
      ctx.beginPath();
      ctx.arc(shape.cx, shape.cy, shape.r, 0, 2 * Math.PI);
    } else if (shape.kind === "strip") {
      capsulePath(ctx, shape.x0, shape.y0, shape.x1, shape.y1, shape.r);
    } else {
      ctx.beginPath();
      shape.points.forEach((p, i) => {
        if (i === 0) {
          ctx.moveTo(p.x, p.y);
        } else {
          ctx.lineTo(p.x, p.y);
        }
      });
      ctx.closePath();
    }
    fillAndStroke(ctx);
  }
}
