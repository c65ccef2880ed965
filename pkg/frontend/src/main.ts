/**
 * Browser bootstrap: create a session for the lesson named in the query
 * string, open its stream, and run the render loop.
 *
 * Query parameters:
 *   lesson  lesson id (default "superposition")
 *   server  HTTP base of the service (default same origin)
 *   seed    optional integer seed for a reproducible session
 */

import { createSession, SessionClient, type SocketLike } from "./client.js";
import { bindControls } from "./input.js";
import type { LessonId } from "./protocol.js";
import { interpolate } from "./scene.js";
import { renderScene } from "./render.js";

async function boot(): Promise<void> {
  const params = new URLSearchParams(window.location.search);
  const lesson = (params.get("lesson") ?? "superposition") as LessonId;
  const httpBase = params.get("server") ?? window.location.origin;
  const wsBase = httpBase.replace(/^http/, "ws");
  const seedParam = params.get("seed");
  const seed = seedParam === null ? undefined : Number(seedParam);

  const banner = document.getElementById("banner")!;
  const canvas = document.getElementById("scene") as HTMLCanvasElement;
  const ctx = canvas.getContext("2d")!;

  const { sessionId } = await createSession(httpBase, lesson, seed);
  const client = new SessionClient({
    baseUrl: wsBase,
    sessionId,
    lesson,
    socketFactory: (url) => new WebSocket(url) as unknown as SocketLike,
    onError: (err) => {
      banner.textContent = `service error: ${err.code}`;
      banner.classList.remove("hidden");
    },
    onConnectionLost: () => {
      banner.textContent = "connection lost; reload to start a new session";
      banner.classList.remove("hidden");
    },
  });

  bindControls(document, (ev) => client.send(ev));

  const speedInput = document.getElementById("anim-speed") as HTMLInputElement | null;
  let last = performance.now();
  const frame = (now: number) => {
    const dt = (now - last) / 1000;
    last = now;
    const scale = speedInput ? Number(speedInput.value) : 1;
    interpolate(client.scene, dt, scale);
    renderScene(ctx, client.scene);
    if (client.scene.menuRequested) {
      banner.textContent = "lesson finished; pick another from the menu";
      banner.classList.remove("hidden");
    }
    requestAnimationFrame(frame);
  };
  requestAnimationFrame(frame);

  // drive lesson time from the page so decoherence style lessons advance
  setInterval(() => client.send({ type: "tick", dt: 0.1 }), 100);
}

boot().catch((err) => {
  const banner = document.getElementById("banner");
  if (banner) {
    banner.textContent = String(err);
    banner.classList.remove("hidden");
  }
});
