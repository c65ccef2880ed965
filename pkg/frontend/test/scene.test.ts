import { describe, expect, it } from "vitest";
import { applyOutputEvent, createScene, interpolate } from "../src/scene.js";

describe("scene reducer", () => {
  it("panel_update replaces the probability panel verbatim", () => {
    const scene = createScene("gate_hadamard");
    applyOutputEvent(scene, {
      type: "panel_update",
      labels: ["|0⟩", "|1⟩"],
      probabilities: [0.4999999999999999, 0.4999999999999999],
    });
    expect(scene.panel).not.toBeNull();
    expect(scene.panel!.labels).toEqual(["|0⟩", "|1⟩"]);
    // copied as received, never recomputed or rounded locally
    expect(scene.panel!.probabilities).toEqual([0.4999999999999999, 0.4999999999999999]);
  });

  it("virtual_cutter_output positions the cutter", () => {
    const scene = createScene("gate_hadamard");
    expect(scene.cutterOutput).toBeNull();
    applyOutputEvent(scene, { type: "virtual_cutter_output", s_out: 0.31 });
    expect(scene.cutterOutput).toBe(0.31);
  });

  it("start_rotation then stop_rotation freezes the coin on a face", () => {
    const scene = createScene("measurement");
    applyOutputEvent(scene, { type: "start_rotation", object_id: "coin", speed: 10 });
    expect(scene.objects.get("coin")!.speed).toBe(10);
    expect(scene.objects.get("coin")!.face).toBeNull();
    applyOutputEvent(scene, { type: "stop_rotation", object_id: "coin", face: "tail" });
    const coin = scene.objects.get("coin")!;
    expect(coin.speed).toBe(0);
    expect(coin.face).toBe("tail");
    const angleBefore = coin.angle;
    interpolate(scene, 0.5);
    expect(coin.angle).toBe(angleBefore);
  });

  it("interpolation advances angle by speed * dt * scale, mod 2pi", () => {
    const scene = createScene("superposition");
    applyOutputEvent(scene, { type: "start_rotation", object_id: "coin", speed: 10 });
    interpolate(scene, 0.1);
    expect(scene.objects.get("coin")!.angle).toBeCloseTo(1.0, 12);
    interpolate(scene, 0.1, 2);
    expect(scene.objects.get("coin")!.angle).toBeCloseTo(3.0, 12);
    interpolate(scene, 1.0);
    expect(scene.objects.get("coin")!.angle).toBeCloseTo(13.0 % (2 * Math.PI), 12);
  });

  it("narration, math, animation and menu events land in overlay state", () => {
    const scene = createScene("decoherence");
    applyOutputEvent(scene, { type: "narration", text_id: "classical_bit" });
    applyOutputEvent(scene, { type: "show_math", expression_id: "matrix_hadamard" });
    applyOutputEvent(scene, { type: "animate", kind: "environment_interaction", params: {} });
    applyOutputEvent(scene, { type: "return_to_menu" });
    expect(scene.narration).toBe("classical_bit");
    expect(scene.mathExpression).toBe("matrix_hadamard");
    expect(scene.animation!.kind).toBe("environment_interaction");
    expect(scene.menuRequested).toBe(true);
  });
});
