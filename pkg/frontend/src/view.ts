/** Session state as the client sees it: the latest good scene and covers
 * blocks, the covers-visualization flag, the active preset, and the banner.
 *
 * The view renders only what the server pushed. A malformed block raises the
 * banner and leaves the previous frame in place; the next good scene block
 * clears it.
 */

import type { ServerEvent } from "./protocol.js";
import type { CoverNodeView, SceneEntry } from "./scene.js";
import { parseCovers, parseScene } from "./scene.js";
import type { Draw2D } from "./render.js";
import { drawCovers, drawScene } from "./render.js";

function describe(error: unknown): string {
  return error instanceof Error ? error.message : String(error);
}

export class SessionView {
  scene: SceneEntry[] = [];
  covers: CoverNodeView[] = [];
  coversVisible = false;
  preset: string | null = null;
  cursorHint = "Default";
  banner: string | null = null;

  applyEvent(event: ServerEvent): void {
    switch (event.kind) {
      case "scene":
        try {
          this.scene = parseScene(event.lines);
          this.banner = null;
        } catch (error) {
          this.banner = `bad scene block: ${describe(error)}`;
        }
        break;
      case "covers":
        try {
          this.covers = parseCovers(event.lines);
        } catch (error) {
          this.banner = `bad covers block: ${describe(error)}`;
        }
        break;
      case "cursor":
        this.cursorHint = event.hint;
        break;
      case "err":
        this.banner = `line ${event.line}: ${event.message}`;
        break;
      case "bad":
        this.banner = event.text;
        break;
    }
  }

  applyAll(events: ServerEvent[]): void {
    for (const event of events) {
      this.applyEvent(event);
    }
  }

  render(ctx: Draw2D, width: number, height: number): void {
    drawScene(ctx, this.scene, width, height);
    if (this.coversVisible) {
      drawCovers(ctx, this.covers);
    }
  }
}

const CURSOR_CSS: Record<string, string> = {
  Default: "default",
  SizeAll: "move",
  Hand: "pointer",
  SizeNS: "ns-resize",
  SizeWE: "ew-resize",
};

/** CSS cursor for a server cursor hint; unknown hints fall back to default. */
export function cssCursor(hint: string): string {
  return CURSOR_CSS[hint] ?? "default";
}
