/** Client side of the line-oriented session protocol.
 *
 * The server answers each command line with zero or more reply lines:
 * `scene N` / `covers N` headers open blocks of exactly N lines closed by
 * `end`, while `cursor HINT` and `err LINE MESSAGE` are single lines.
 * `BlockReader` turns a raw character stream (arbitrarily chunked) back
 * into those replies.
 */

export interface SceneEvent {
  kind: "scene";
  lines: string[];
}

export interface CoversEvent {
  kind: "covers";
  lines: string[];
}

export interface CursorEvent {
  kind: "cursor";
  hint: string;
}

export interface ErrEvent {
  kind: "err";
  line: number;
  message: string;
}

/** Input that is not part of the protocol; the view shows it as a banner. */
export interface BadEvent {
  kind: "bad";
  text: string;
}

export type ServerEvent = SceneEvent | CoversEvent | CursorEvent | ErrEvent | BadEvent;

const BLOCK_HEADER = /^(scene|covers) (\d+)$/;
const ERR_LINE = /^err (\d+) (.*)$/;

interface OpenBlock {
  kind: "scene" | "covers";
  want: number;
  lines: string[];
}

export class BlockReader {
  private buffer = "";
  private block: OpenBlock | null = null;

  /** Consume a chunk of the stream; returns every reply completed by it. */
  feed(chunk: string): ServerEvent[] {
    const out: ServerEvent[] = [];
    this.buffer += chunk;
    let cut: number;
    while ((cut = this.buffer.indexOf("\n")) >= 0) {
      let line = this.buffer.slice(0, cut);
      this.buffer = this.buffer.slice(cut + 1);
      if (line.endsWith("\r")) {
        line = line.slice(0, -1);
      }
      this.takeLine(line, out);
    }
    return out;
  }

  /** True while a block header has been seen but its `end` has not. */
  get inBlock(): boolean {
    return this.block !== null;
  }

  private takeLine(line: string, out: ServerEvent[]): void {
    const block = this.block;
    if (block !== null) {
      if (block.lines.length < block.want) {
        block.lines.push(line);
        return;
      }
      this.block = null;
      if (line === "end") {
        out.push({ kind: block.kind, lines: block.lines });
        return;
      }
      out.push({ kind: "bad", text: `missing end of ${block.kind} block before: ${line}` });
      this.takeLine(line, out); // the offender may itself be a fresh header
      return;
    }
    if (line === "") {
      return;
    }
    const header = BLOCK_HEADER.exec(line);
    if (header !== null) {
      this.block = { kind: header[1] as "scene" | "covers", want: Number(header[2]), lines: [] };
      return;
    }
    if (line.startsWith("cursor ")) {
      out.push({ kind: "cursor", hint: line.slice("cursor ".length) });
      return;
    }
    const err = ERR_LINE.exec(line);
    if (err !== null) {
      out.push({ kind: "err", line: Number(err[1]), message: err[2] });
      return;
    }
    out.push({ kind: "bad", text: `unrecognized reply line: ${line}` });
  }
}

/** Anything that can carry command lines to a session and stream replies back. */
export interface Transport {
  /** Send one command line (without the trailing newline). */
  send(line: string): void;
  close(): void;
}
