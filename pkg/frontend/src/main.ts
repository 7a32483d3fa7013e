/** Browser entry point: one canvas, one live session.
 *
 * The page connects to the session server over a WebSocket at /ws, sends the
 * scenario commands for the chosen preset, and forwards pointer gestures as
 * press/drag/release lines (plus throttled sense lines while hovering). All
 * scene state lives server-side; every frame is painted from the last scene
 * block the server pushed.
 */

import { BlockReader } from "./protocol.js";
import { PRESETS } from "./presets.js";
import { SessionView, cssCursor } from "./view.js";

const WIDTH = 800;
const HEIGHT = 600;
const SENSE_INTERVAL_MS = 40;
const RETRY_BASE_MS = 500;
const RETRY_MAX_MS = 5000;

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  className?: string,
  text?: string,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  if (className !== undefined) {
    node.className = className;
  }
  if (text !== undefined) {
    node.textContent = text;
  }
  return node;
}

class Client {
  private socket: WebSocket | null = null;
  private reader = new BlockReader();
  private retryMs = RETRY_BASE_MS;
  private closing = false;
  readonly view = new SessionView();

  constructor(
    private readonly url: string,
    private readonly onUpdate: () => void,
    private readonly onStatus: (text: string) => void,
  ) {}

  /** Open a fresh session (dropping any current one) and run its setup lines. */
  start(preset: string | null, setup: string[]): void {
    this.view.preset = preset;
    this.view.covers = [];
    this.dropSocket();
    this.connect(setup);
  }

  private connect(setup: string[]): void {
    this.onStatus("connecting…");
    this.reader = new BlockReader();
    const socket = new WebSocket(this.url);
    this.socket = socket;
    socket.onopen = () => {
      this.retryMs = RETRY_BASE_MS;
      this.onStatus("connected");
      this.view.banner = null;
      for (const line of setup) {
        this.send(line);
      }
      if (this.view.coversVisible) {
        this.send("covers on");
      }
      this.onUpdate();
    };
    socket.onmessage = (message: MessageEvent<string>) => {
      this.view.applyAll(this.reader.feed(String(message.data) + "\n"));
      this.onUpdate();
    };
    socket.onclose = () => {
      if (this.closing) {
        this.closing = false;
        return;
      }
      this.view.banner = "connection lost — retrying…";
      this.onStatus("disconnected");
      this.onUpdate();
      const delay = this.retryMs;
      this.retryMs = Math.min(this.retryMs * 2, RETRY_MAX_MS);
      window.setTimeout(() => {
        if (this.socket === socket) {
          this.connect(setup);
        }
      }, delay);
    };
  }

  /** Send one command line; pointer events are dropped while disconnected. */
  send(line: string): void {
    if (this.socket !== null && this.socket.readyState === WebSocket.OPEN) {
      this.socket.send(line);
    }
  }

  private dropSocket(): void {
    if (this.socket !== null) {
      this.closing = true;
      const old = this.socket;
      this.socket = null;
      old.onclose = null;
      old.close();
      this.closing = false;
    }
  }
}

function wsUrl(): string {
  const scheme = window.location.protocol === "https:" ? "wss" : "ws";
  return `${scheme}://${window.location.host}/ws`;
}

function boot(): void {
  const root = el("div", "app");
  const toolbar = el("div", "toolbar");
  const status = el("span", "status", "starting…");
  const banner = el("div", "banner");
  banner.style.display = "none";
  const canvas = el("canvas");
  canvas.width = WIDTH;
  canvas.height = HEIGHT;
  const ctx = canvas.getContext("2d");
  if (ctx === null) {
    document.body.appendChild(el("div", "banner", "2D canvas is unavailable in this browser"));
    return;
  }

  const client = new Client(wsUrl(), repaint, (text) => {
    status.textContent = text;
  });

  function repaint(): void {
    client.view.render(ctx!, WIDTH, HEIGHT);
    canvas.style.cursor = cssCursor(client.view.cursorHint);
    if (client.view.banner !== null) {
      banner.textContent = client.view.banner;
      banner.style.display = "block";
    } else {
      banner.style.display = "none";
    }
  }

  let activeButton: HTMLButtonElement | null = null;
  for (const preset of PRESETS) {
    const button = el("button", "preset", preset.title);
    button.title = preset.blurb;
    button.addEventListener("click", () => {
      if (activeButton !== null) {
        activeButton.classList.remove("active");
      }
      activeButton = button;
      button.classList.add("active");
      client.start(preset.name, preset.setup);
    });
    toolbar.appendChild(button);
  }

  const coversButton = el("button", "covers", "covers: off");
  coversButton.addEventListener("click", () => {
    client.view.coversVisible = !client.view.coversVisible;
    coversButton.textContent = client.view.coversVisible ? "covers: on" : "covers: off";
    client.send(client.view.coversVisible ? "covers on" : "covers off");
    repaint();
  });
  toolbar.appendChild(coversButton);

  const traceButton = el("button", "trace", "replay trace");
  traceButton.title = "Send the preset's recorded pointer trace";
  traceButton.addEventListener("click", () => {
    const preset = PRESETS.find((p) => p.name === client.view.preset);
    if (preset === undefined) {
      return;
    }
    for (const line of preset.trace) {
      client.send(line);
    }
  });
  toolbar.appendChild(traceButton);
  toolbar.appendChild(status);

  let pressed = false;
  let lastSense = 0;

  function point(event: PointerEvent): { x: number; y: number } {
    return { x: Math.round(event.offsetX), y: Math.round(event.offsetY) };
  }

  canvas.addEventListener("contextmenu", (event) => event.preventDefault());
  canvas.addEventListener("pointerdown", (event) => {
    if (event.button !== 0 && event.button !== 2) {
      return;
    }
    canvas.setPointerCapture(event.pointerId);
    const { x, y } = point(event);
    pressed = true;
    client.send(`press ${x} ${y} ${event.button === 2 ? "right" : "left"}`);
  });
  canvas.addEventListener("pointermove", (event) => {
    const { x, y } = point(event);
    if (pressed) {
      client.send(`drag ${x} ${y}`);
      return;
    }
    const now = performance.now();
    if (now - lastSense >= SENSE_INTERVAL_MS) {
      lastSense = now;
      client.send(`sense ${x} ${y}`);
    }
  });
  canvas.addEventListener("pointerup", (event) => {
    if (!pressed) {
      return;
    }
    pressed = false;
    canvas.releasePointerCapture(event.pointerId);
    client.send("release");
  });

  root.appendChild(toolbar);
  root.appendChild(banner);
  root.appendChild(canvas);
  document.body.appendChild(root);

  const first = PRESETS[0];
  client.start(first.name, first.setup);
  if (toolbar.firstChild instanceof HTMLButtonElement) {
    activeButton = toolbar.firstChild;
    activeButton.classList.add("active");
  }
  repaint();
}

boot();
