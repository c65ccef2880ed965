/**
 * Input surface: maps buttons and pointer drags on the page to wire input
 * events. Gesture and object-token buttons replace the camera pipeline of
 * a headset deployment.
 */

import type { InputEvent, ObjectKind } from "./protocol.js";

export type InputSink = (event: InputEvent) => void;

export interface ObjectToken {
  kind: ObjectKind;
  zone: string;
  slider?: number;
}

/** Wire up the fixed control strip. Elements are looked up by id. */
export function bindControls(doc: Document, sink: InputSink): void {
  doc.getElementById("btn-fist")?.addEventListener("click", () => {
    sink({ type: "gesture", kind: "fist" });
  });
  doc.getElementById("btn-thumbs-up")?.addEventListener("click", () => {
    sink({ type: "gesture", kind: "thumbs_up" });
  });
  const tokens = doc.querySelectorAll<HTMLElement>("[data-object-kind]");
  tokens.forEach((el) => {
    el.addEventListener("click", () => {
      const kind = el.dataset.objectKind as ObjectKind;
      const zone = el.dataset.objectZone ?? "magic-circle";
      const ev: InputEvent = { type: "object_detected", kind, zone };
      if (kind === "paper_cutter") {
        const slider = doc.getElementById("slider") as HTMLInputElement | null;
        ev.slider = slider ? Number(slider.value) : 0;
      }
      sink(ev);
    });
  });
  const slider = doc.getElementById("slider") as HTMLInputElement | null;
  slider?.addEventListener("input", () => {
    sink({ type: "slider_moved", s: Number(slider.value) });
  });
}

/** Clamp-free mapping of a track drag position to the slider parameter. */
export function dragToSlider(x: number, trackLeft: number, trackWidth: number): number {
  return (x - trackLeft) / trackWidth;
}
