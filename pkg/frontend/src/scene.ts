/**
 * Scene model: the pure reduction of received output events into drawable
 * state, plus local animation interpolation between frames.
 *
 * Thin-client invariant: every probability in the model is copied verbatim
 * from a received panel_update / virtual_cutter_output; the UI never
 * computes one itself.
 */

import type { Face, LessonId, OutputEvent } from "./protocol.js";

export interface ObjectVisual {
  angle: number;       // rad, advanced locally between frames
  speed: number;       // rad/s, as last commanded by the service
  face: Face | null;   // set when rotation stopped
  visible: boolean;
}

export interface PanelState {
  labels: string[];
  probabilities: number[];
}

export interface SceneModel {
  lesson: LessonId;
  objects: Map<string, ObjectVisual>;
  panel: PanelState | null;
  cutterOutput: number | null;   // virtual cutter position, P(|0>)
  mathExpression: string | null;
  narration: string | null;
  animation: { kind: string; params: Record<string, unknown> } | null;
  menuRequested: boolean;
  lastSeq: number;
}

export function createScene(lesson: LessonId): SceneModel {
  return {
    lesson,
    objects: new Map(),
    panel: null,
    cutterOutput: null,
    mathExpression: null,
    narration: null,
    animation: null,
    menuRequested: false,
    lastSeq: 0,
  };
}

function objectOf(scene: SceneModel, id: string): ObjectVisual {
  let obj = scene.objects.get(id);
  if (!obj) {
    obj = { angle: 0, speed: 0, face: null, visible: true };
    scene.objects.set(id, obj);
  }
  return obj;
}

/** Apply one output event in stream order. */
export function applyOutputEvent(scene: SceneModel, ev: OutputEvent): SceneModel {
  switch (ev.type) {
    case "start_rotation": {
      const obj = objectOf(scene, ev.object_id);
      obj.speed = ev.speed;
      obj.face = null;
      break;
    }
    case "stop_rotation": {
      const obj = objectOf(scene, ev.object_id);
      obj.speed = 0;
      obj.face = ev.face;
      break;
    }
    case "panel_update":
      scene.panel = { labels: [...ev.labels], probabilities: [...ev.probabilities] };
      break;
    case "virtual_cutter_output":
      scene.cutterOutput = ev.s_out;
      break;
    case "show_math":
      scene.mathExpression = ev.expression_id;
      break;
    case "narration":
      scene.narration = ev.text_id;
      break;
    case "animate":
      scene.animation = { kind: ev.kind, params: ev.params };
      break;
    case "return_to_menu":
      scene.menuRequested = true;
      break;
  }
  return scene;
}

/** Advance local rotation angles; purely cosmetic between server events. */
export function interpolate(scene: SceneModel, dt: number, speedScale = 1): void {
  for (const obj of scene.objects.values()) {
    obj.angle = (obj.angle + obj.speed * speedScale * dt) % (2 * Math.PI);
  }
}
