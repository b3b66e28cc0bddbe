import { readFileSync } from "node:fs";
import { join } from "node:path";

import { describe, expect, it } from "vitest";

import { parseScene } from "../src/scene.js";
import {
  chamberInfo,
  chamberVisible,
  indexDocument,
  initialState,
  selectChamber,
  selectionGallery,
  setApartmentOnly,
  setMaxDistance,
} from "../src/state.js";

const doc = parseScene(
  readFileSync(join(__dirname, "..", "fixtures", "fano.json"), "utf8"),
);
const index = indexDocument(doc);

describe("selection", () => {
  it("picks one, then two, then starts over", () => {
    let state = selectChamber(initialState, 4);
    expect(state.selection).toEqual([4]);
    state = selectChamber(state, 9);
    expect(state.selection).toEqual([4, 9]);
    state = selectChamber(state, 2);
    expect(state.selection).toEqual([2]);
  });

  it("clears on empty pick", () => {
    const state = selectChamber(selectChamber(initialState, 4), null);
    expect(state.selection).toEqual([]);
  });

  it("the same chamber twice queries the trivial gallery", () => {
    const state = selectChamber(selectChamber(initialState, 7), 7);
    const gallery = selectionGallery(index, state);
    expect(gallery).not.toBeNull();
    expect(gallery).not.toBe("unreachable");
    if (gallery !== null && gallery !== "unreachable") {
      expect(gallery.distance).toBe(0);
      expect(gallery.word).toEqual([]);
    }
  });
});

describe("chamber info", () => {
  it("base chamber shows the identity label, empty word, distance 0", () => {
    const info = chamberInfo(index, index.base);
    expect(info.word).toEqual([]);
    expect(info.fiber).toBe(0);
    expect(info.distance).toBe(0);
    expect(info.labelRows).toEqual([
      ["1/1", "0/1", "0/1"],
      ["0/1", "1/1", "0/1"],
      ["0/1", "0/1", "1/1"],
    ]);
  });

  it("distances come from BFS over the scene edges", () => {
    for (const chamber of doc.chambers) {
      const info = chamberInfo(index, chamber.id);
      expect(info.distance).toBe(chamber.word.length);
    }
  });
});

describe("filters", () => {
  it("never mutate the document and hide by distance", () => {
    const state = setMaxDistance(initialState, 1);
    const visible = doc.chambers.filter((c) => chamberVisible(index, state, c.id));
    expect(visible.length).toBe(1 + 2 * 2); // base plus two panels of two
    expect(doc.chambers).toHaveLength(21);
  });

  it("apartment-only keeps fiber 0", () => {
    const state = setApartmentOnly(initialState, true);
    const visible = doc.chambers.filter((c) => chamberVisible(index, state, c.id));
    expect(visible.map((c) => c.fiber)).toEqual(new Array(6).fill(0));
  });
});
