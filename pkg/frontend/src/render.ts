/**
 * Canvas renderer for the lesson scene: rotating coins, the probability
 * panel, the virtual cutter track, and overlay text.
 */

import type { SceneModel } from "./scene.js";

const COIN_RADIUS = 48;
const PANEL_X = 420;
const PANEL_W = 200;
const BAR_H = 26;

const NARRATION_TEXT: Record<string, string> = {
  invalid_slider: "Slider position must be between 0 and 1.",
  classical_bit: "The environment has measured the coin: it is classical now.",
  cube_mismatch: "That cube does not match this lesson's gate.",
};

function drawCoin(
  ctx: CanvasRenderingContext2D,
  x: number,
  y: number,
  angle: number,
  face: string | null,
): void {
  ctx.save();
  ctx.translate(x, y);
  // foreshorten horizontally by cos(angle) to fake the spin
  const squeeze = Math.abs(Math.cos(angle));
  ctx.scale(Math.max(squeeze, 0.05), 1);
  ctx.beginPath();
  ctx.arc(0, 0, COIN_RADIUS, 0, 2 * Math.PI);
  ctx.fillStyle = face === "head" ? "#d4af37" : face === "tail" ? "#a9a9a9" : "#c0c0c0";
  ctx.fill();
  ctx.strokeStyle = "#333";
  ctx.stroke();
  ctx.restore();
  if (face) {
    ctx.fillStyle = "#111";
    ctx.font = "14px sans-serif";
    ctx.textAlign = "center";
    ctx.fillText(face === "head" ? "H" : "T", x, y + 5);
  }
}

function drawPanel(ctx: CanvasRenderingContext2D, scene: SceneModel): void {
  if (!scene.panel) return;
  ctx.font = "13px monospace";
  ctx.textAlign = "left";
  scene.panel.labels.forEach((label, i) => {
    const p = scene.panel!.probabilities[i];
    const y = 40 + i * (BAR_H + 10);
    ctx.fillStyle = "#eee";
    ctx.fillRect(PANEL_X, y, PANEL_W, BAR_H);
    ctx.fillStyle = "#4a90d9";
    ctx.fillRect(PANEL_X, y, PANEL_W * p, BAR_H);
    ctx.strokeStyle = "#333";
    ctx.strokeRect(PANEL_X, y, PANEL_W, BAR_H);
    ctx.fillStyle = "#111";
    ctx.fillText(`${label}  ${(p * 100).toFixed(1)}%`, PANEL_X + 6, y + 17);
  });
}

function drawCutter(ctx: CanvasRenderingContext2D, scene: SceneModel): void {
  if (scene.cutterOutput === null) return;
  const y = 320;
  ctx.fillStyle = "#111";
  ctx.font = "13px sans-serif";
  ctx.textAlign = "left";
  ctx.fillText("virtual cutter output", PANEL_X, y - 10);
  ctx.strokeStyle = "#333";
  ctx.strokeRect(PANEL_X, y, PANEL_W, 14);
  const knobX = PANEL_X + PANEL_W * scene.cutterOutput;
  ctx.fillStyle = "#d9534f";
  ctx.fillRect(knobX - 3, y - 3, 6, 20);
}

export function renderScene(ctx: CanvasRenderingContext2D, scene: SceneModel): void {
  ctx.clearRect(0, 0, ctx.canvas.width, ctx.canvas.height);
  let x = 120;
  for (const [id, obj] of scene.objects) {
    if (!obj.visible) continue;
    drawCoin(ctx, x, 140, obj.angle, obj.face);
    ctx.fillStyle = "#555";
    ctx.font = "12px sans-serif";
    ctx.textAlign = "center";
    ctx.fillText(id, x, 210);
    x += 140;
  }
  drawPanel(ctx, scene);
  drawCutter(ctx, scene);
  if (scene.mathExpression) {
    ctx.fillStyle = "#111";
    ctx.font = "15px serif";
    ctx.textAlign = "left";
    ctx.fillText(mathText(scene.mathExpression), 40, 300);
  }
  if (scene.narration) {
    ctx.fillStyle = "#7a3b00";
    ctx.font = "14px sans-serif";
    ctx.textAlign = "left";
    ctx.fillText(NARRATION_TEXT[scene.narration] ?? scene.narration, 40, 340);
  }
  if (scene.animation) {
    ctx.fillStyle = "#2a6";
    ctx.font = "13px sans-serif";
    ctx.fillText(`animation: ${scene.animation.kind}`, 40, 370);
  }
}

function mathText(id: string): string {
  switch (id) {
    case "matrix_identity":
      return "I = [[1, 0], [0, 1]]";
    case "matrix_paulix":
      return "X = [[0, 1], [1, 0]]";
    case "matrix_hadamard":
      return "H = (1/sqrt(2)) [[1, 1], [1, -1]]";
    default:
      return id;
  }
}
