/**
 * Session client: owns the WebSocket, stamps outgoing seq numbers, and
 * applies server messages to the scene in stream order.
 */

import {
  inputMessage,
  isOutputEvent,
  outputEventOf,
  parseServerMessage,
  type InputEvent,
  type ServerError,
  type WireMessage,
} from "./protocol.js";
import { applyOutputEvent, createScene, type SceneModel } from "./scene.js";
import type { LessonId } from "./protocol.js";

/** Minimal socket surface so tests can substitute a scripted double. */
export interface SocketLike {
  send(data: string): void;
  close(): void;
  onmessage: ((ev: { data: string }) => void) | null;
  onclose: (() => void) | null;
  onerror: ((ev: unknown) => void) | null;
  onopen: (() => void) | null;
}

export type SocketFactory = (url: string) => SocketLike;

export interface ClientOptions {
  baseUrl: string;           // e.g. ws://localhost:8000
  sessionId: string;
  lesson: LessonId;
  socketFactory: SocketFactory;
  onError?: (err: ServerError) => void;
  onConnectionLost?: () => void;
}

export class SessionClient {
  readonly scene: SceneModel;
  private socket: SocketLike;
  private outSeq = 0;
  private opts: ClientOptions;
  connected = false;

  constructor(opts: ClientOptions) {
    this.opts = opts;
    this.scene = createScene(opts.lesson);
    const url = `${opts.baseUrl}/sessions/${opts.sessionId}/stream`;
    this.socket = opts.socketFactory(url);
    this.socket.onopen = () => {
      this.connected = true;
    };
    this.socket.onmessage = (ev) => this.handleRaw(ev.data);
    this.socket.onclose = () => {
      this.connected = false;
      this.opts.onConnectionLost?.();
    };
    this.socket.onerror = () => {
      this.connected = false;
      this.opts.onConnectionLost?.();
    };
  }

  private handleRaw(raw: string): void {
    let msg: WireMessage;
    try {
      msg = parseServerMessage(raw);
    } catch {
      return; // ignore undecodable frames; the stream itself stays usable
    }
    if (isOutputEvent(msg)) {
      // seq is strictly increasing per session; drop stale duplicates
      if (msg.seq <= this.scene.lastSeq) return;
      this.scene.lastSeq = msg.seq;
      applyOutputEvent(this.scene, outputEventOf(msg));
    } else if (msg.type === "error") {
      this.opts.onError?.(msg.payload as unknown as ServerError);
    }
  }

  /** Send one learner input event over the stream. */
  send(event: InputEvent): void {
    this.outSeq += 1;
    this.socket.send(
      JSON.stringify(inputMessage(this.opts.sessionId, this.outSeq, event)),
    );
  }

  close(): void {
    this.socket.close();
  }
}

/** Create a session over HTTP, then open its event stream. */
export async function createSession(
  httpBase: string,
  lesson: LessonId,
  seed?: number,
): Promise<{ sessionId: string; seed: number }> {
  const body: Record<string, unknown> = { lesson };
  if (seed !== undefined) body.seed = seed;
  const resp = await fetch(`${httpBase}/sessions`, {
    method: "POST",
    headers: { "content-type": "application/json" },
    body: JSON.stringify(body),
  });
  if (!resp.ok) {
    throw new Error(`session create failed: ${resp.status}`);
  }
  const data = (await resp.json()) as { session_id: string; seed: number };
  return { sessionId: data.session_id, seed: data.seed };
}
