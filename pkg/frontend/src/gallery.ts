/** In-browser breadth-first search over the scene's edge list.
 *
 * Mirrors the core exactly, including the tie-break: among all minimal
 * galleries the lexicographically least type word is returned, found by
 * advancing a frontier and always taking the smallest edge type.
 */

import type { SceneDocument } from "./scene.js";

export type Neighbors = Array<Array<[number, number]>>; // per chamber: [other, type]

export function buildNeighbors(doc: SceneDocument): Neighbors {
  const neighbors: Neighbors = doc.chambers.map(() => []);
  for (const e of doc.edges) {
    neighbors[e.a].push([e.b, e.type]);
    neighbors[e.b].push([e.a, e.type]);
  }
  for (const list of neighbors) list.sort((x, y) => x[0] - y[0] || x[1] - y[1]);
  return neighbors;
}

export function distancesFrom(neighbors: Neighbors, start: number): Array<number | null> {
  const dist: Array<number | null> = neighbors.map(() => null);
  dist[start] = 0;
  const queue = [start];
  for (let head = 0; head < queue.length; head++) {
    const c = queue[head];
    for (const [nbr] of neighbors[c]) {
      if (dist[nbr] === null) {
        dist[nbr] = (dist[c] as number) + 1;
        queue.push(nbr);
      }
    }
  }
  return dist;
}

export interface Gallery {
  distance: number;
  word: number[];
  /** One concrete minimal gallery realizing the word (chamber ids, from a to b). */
  chambers: number[];
}

/** Returns null when b is outside the generated ball around a. */
export function shortestGallery(neighbors: Neighbors, a: number, b: number): Gallery | null {
  const distToB = distancesFrom(neighbors, b);
  const total = distToB[a];
  if (total === null) return null;

  const word: number[] = [];
  const frontiers: Array<Set<number>> = [new Set([a])];
  for (let remaining = total; remaining > 0; remaining--) {
    const byType = new Map<number, Set<number>>();
    for (const c of frontiers[frontiers.length - 1]) {
      for (const [nbr, t] of neighbors[c]) {
        if (distToB[nbr] === remaining - 1) {
          if (!byType.has(t)) byType.set(t, new Set());
          byType.get(t)!.add(nbr);
        }
      }
    }
    const t = Math.min(...byType.keys());
    word.push(t);
    frontiers.push(byType.get(t)!);
  }

  // One concrete gallery realizing the word: every frontier member is
  // reachable from the previous frontier by an edge of the chosen type, so
  // reconstruct backwards from b, taking the smallest id on ties.
  const chambers = [b];
  for (let k = total - 1; k >= 0; k--) {
    const next = chambers[0];
    const candidates = [...frontiers[k]]
      .filter((c) =>
        neighbors[c].some(([nbr, t]) => nbr === next && t === word[k]),
      )
      .sort((x, y) => x - y);
    chambers.unshift(candidates[0]);
  }
  return { distance: total, word, chambers };
}
