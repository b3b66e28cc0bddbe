import { readFileSync } from "node:fs";
import { join } from "node:path";

import { describe, expect, it } from "vitest";

import { buildNeighbors, distancesFrom, shortestGallery } from "../src/gallery.js";
import { parseScene } from "../src/scene.js";

const fixturesDir = join(__dirname, "..", "fixtures");
const doc = parseScene(readFileSync(join(fixturesDir, "fano.json"), "utf8"));
const pathsFixture = JSON.parse(
  readFileSync(join(fixturesDir, "fano_paths.json"), "utf8"),
) as { pairs: [number, number, number, number[]][] };

describe("in-browser gallery search", () => {
  const neighbors = buildNeighbors(doc);

  it("reproduces the core distance and word for every ordered pair", () => {
    expect(pathsFixture.pairs).toHaveLength(21 * 21);
    for (const [a, b, distance, word] of pathsFixture.pairs) {
      const gallery = shortestGallery(neighbors, a, b);
      expect(gallery, `pair ${a} -> ${b}`).not.toBeNull();
      expect(gallery!.distance, `pair ${a} -> ${b}`).toBe(distance);
      expect(gallery!.word, `pair ${a} -> ${b}`).toEqual(word);
    }
  });

  it("returns a concrete gallery realizing the word", () => {
    for (const [a, b, distance, word] of pathsFixture.pairs) {
      if (distance < 2) continue;
      const gallery = shortestGallery(neighbors, a, b)!;
      expect(gallery.chambers).toHaveLength(distance + 1);
      expect(gallery.chambers[0]).toBe(a);
      expect(gallery.chambers[distance]).toBe(b);
      gallery.chambers.slice(0, -1).forEach((c, k) => {
        const next = gallery.chambers[k + 1];
        const edge = neighbors[c].find(([nbr, t]) => nbr === next && t === word[k]);
        expect(edge, `step ${k} of ${a} -> ${b}`).toBeDefined();
      });
    }
  });

  it("maximal distance is 3 and is attained", () => {
    const distances = pathsFixture.pairs.map(([, , d]) => d);
    expect(Math.max(...distances)).toBe(3);
  });

  it("self distance is zero with empty word", () => {
    expect(shortestGallery(neighbors, 5, 5)).toEqual({
      distance: 0,
      word: [],
      chambers: [5],
    });
  });

  it("signals unreachable chambers", () => {
    const disconnected = [[], []] as ReturnType<typeof buildNeighbors>;
    expect(shortestGallery(disconnected, 0, 1)).toBeNull();
    expect(distancesFrom(disconnected, 0)[1]).toBeNull();
  });
});
