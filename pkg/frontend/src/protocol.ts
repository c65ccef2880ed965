/**
 * Wire protocol types and encoding (version 1).
 *
 * Mirrors docs/wire-protocol.md in the repository root; the `type` tags and
 * payload fields are normative and must match the service byte for byte.
 */

export const PROTOCOL_VERSION = 1;

export type LessonId =
  | "superposition"
  | "measurement"
  | "decoherence"
  | "tunneling"
  | "teleportation"
  | "entanglement"
  | "gate_identity"
  | "gate_pauli_x"
  | "gate_hadamard";

export type GestureKind = "fist" | "thumbs_up";
export type ObjectKind = "coin" | "paper_cutter" | "cube_i" | "cube_x" | "cube_h";
export type Face = "head" | "tail";

export type InputEvent =
  | { type: "gesture"; kind: GestureKind }
  | { type: "object_detected"; kind: ObjectKind; zone: string; slider?: number }
  | { type: "slider_moved"; s: number }
  | { type: "menu_select"; lesson: LessonId }
  | { type: "tick"; dt: number };

export type OutputEvent =
  | { type: "start_rotation"; object_id: string; speed: number }
  | { type: "stop_rotation"; object_id: string; face: Face }
  | { type: "panel_update"; labels: string[]; probabilities: number[] }
  | { type: "show_math"; expression_id: string }
  | { type: "animate"; kind: string; params: Record<string, unknown> }
  | { type: "narration"; text_id: string }
  | { type: "return_to_menu" }
  | { type: "virtual_cutter_output"; s_out: number };

export interface WireMessage {
  v: number;
  type: string;
  session_id: string;
  seq: number;
  payload: Record<string, unknown>;
}

export interface ServerError {
  code: string;
  message: string;
}

/** Build the seq-stamped envelope for one learner input event. */
export function inputMessage(
  sessionId: string,
  seq: number,
  event: InputEvent,
): WireMessage {
  return {
    v: PROTOCOL_VERSION,
    type: "input_event",
    session_id: sessionId,
    seq,
    payload: { event },
  };
}

export function parseServerMessage(raw: string): WireMessage {
  const data = JSON.parse(raw);
  if (typeof data !== "object" || data === null || typeof data.type !== "string") {
    throw new Error("malformed server message");
  }
  return data as WireMessage;
}

export function isOutputEvent(msg: WireMessage): boolean {
  return msg.type === "output_event";
}

export function outputEventOf(msg: WireMessage): OutputEvent {
  if (!isOutputEvent(msg)) throw new Error(`not an output_event: ${msg.type}`);
  return msg.payload as unknown as OutputEvent;
}
