/** Viewer state and the pure view-model helpers the DOM layer renders from.
 *
 * Filters and color modes never mutate the scene document; they only decide
 * visibility and materials downstream.
 */

import { buildNeighbors, distancesFrom, shortestGallery, type Gallery, type Neighbors } from "./gallery.js";
import { baseChamber, type SceneDocument } from "./scene.js";

export type ColorMode = "by-word-length" | "by-edge-type" | "by-height";

export interface ViewerState {
  selection: number[]; // 0, 1 or 2 chamber ids
  colorMode: ColorMode;
  maxDistance: number | null; // filter: hide chambers further from the base
  apartmentOnly: boolean;
}

export const initialState: ViewerState = {
  selection: [],
  colorMode: "by-word-length",
  maxDistance: null,
  apartmentOnly: false,
};

/** Pick semantics: empty pick clears; with two chambers already selected a
 * new pick starts over; otherwise the pick extends the selection (picking
 * the same chamber twice is allowed and queries the trivial gallery). */
export function selectChamber(state: ViewerState, id: number | null): ViewerState {
  if (id === null) return { ...state, selection: [] };
  if (state.selection.length === 1) return { ...state, selection: [state.selection[0], id] };
  return { ...state, selection: [id] };
}

export function setColorMode(state: ViewerState, colorMode: ColorMode): ViewerState {
  return { ...state, colorMode };
}

export function setMaxDistance(state: ViewerState, maxDistance: number | null): ViewerState {
  return { ...state, maxDistance };
}

export function setApartmentOnly(state: ViewerState, apartmentOnly: boolean): ViewerState {
  return { ...state, apartmentOnly };
}

/** Precomputed per-document data shared by rendering and queries. */
export interface DocIndex {
  doc: SceneDocument;
  neighbors: Neighbors;
  base: number;
  distances: Array<number | null>;
}

export function indexDocument(doc: SceneDocument): DocIndex {
  const neighbors = buildNeighbors(doc);
  const base = baseChamber(doc);
  return { doc, neighbors, base, distances: distancesFrom(neighbors, base) };
}

export interface ChamberInfo {
  id: number;
  word: number[];
  fiber: number;
  height: number;
  distance: number | null;
  labelRows: string[][]; // exact rational strings, row-major
}

export function chamberInfo(index: DocIndex, id: number): ChamberInfo {
  const chamber = index.doc.chambers[id];
  const n = Math.round(Math.sqrt(chamber.label.length));
  const labelRows: string[][] = [];
  for (let i = 0; i < n; i++) labelRows.push(chamber.label.slice(i * n, (i + 1) * n));
  return {
    id,
    word: chamber.word,
    fiber: chamber.fiber,
    height: chamber.height,
    distance: index.distances[id],
    labelRows,
  };
}

/** Gallery between the two selected chambers; null when not exactly two are
 * selected, "unreachable" when the scene's ball does not connect them. */
export function selectionGallery(index: DocIndex, state: ViewerState): Gallery | "unreachable" | null {
  if (state.selection.length !== 2) return null;
  const [a, b] = state.selection;
  const gallery = shortestGallery(index.neighbors, a, b);
  return gallery ?? "unreachable";
}

export function chamberVisible(index: DocIndex, state: ViewerState, id: number): boolean {
  if (state.apartmentOnly && index.doc.chambers[id].fiber !== 0) return false;
  if (state.maxDistance !== null) {
    const d = index.distances[id];
    if (d === null || d > state.maxDistance) return false;
  }
  return true;
}
