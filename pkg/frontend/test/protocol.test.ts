import { describe, expect, it } from "vitest";
import {
  inputMessage,
  isOutputEvent,
  outputEventOf,
  parseServerMessage,
  PROTOCOL_VERSION,
} from "../src/protocol.js";

describe("wire encoding", () => {
  it("wraps input events in the versioned envelope", () => {
    const msg = inputMessage("s-1", 3, { type: "gesture", kind: "fist" });
    expect(msg).toEqual({
      v: PROTOCOL_VERSION,
      type: "input_event",
      session_id: "s-1",
      seq: 3,
      payload: { event: { type: "gesture", kind: "fist" } },
    });
  });

  it("round-trips through JSON unchanged", () => {
    const msg = inputMessage("s-1", 1, { type: "slider_moved", s: 0.25 });
    expect(JSON.parse(JSON.stringify(msg))).toEqual(msg);
  });

  it("parses server frames and extracts output events", () => {
    const raw = JSON.stringify({
      v: 1,
      type: "output_event",
      session_id: "s-1",
      seq: 5,
      payload: { type: "virtual_cutter_output", s_out: 0.5 },
    });
    const msg = parseServerMessage(raw);
    expect(isOutputEvent(msg)).toBe(true);
    const ev = outputEventOf(msg);
    expect(ev.type).toBe("virtual_cutter_output");
  });

  it("rejects frames without a type tag", () => {
    expect(() => parseServerMessage("{}")).toThrow();
    expect(() => parseServerMessage("42")).toThrow();
  });
});
