/** Scene document types and schema validation.
 *
 * The viewer consumes exactly what the core CLI exports; it never
 * regenerates buildings. Validation errors carry the path of the failing
 * field so the UI can surface it.
 */

export const SCHEMA_VERSION = 1;

export class SceneFormatError extends Error {
  readonly path: string;

  constructor(path: string, message: string) {
    super(`${path}: ${message}`);
    this.name = "SceneFormatError";
    this.path = path;
  }
}

export interface SceneSpec {
  family: string;
  p: number;
  radius: number;
  height_step: number;
  radial_step: number;
  embed_center: boolean;
}

export interface SceneVertex {
  id: number;
  pos: [number, number, number];
  cotype: number[];
  height: number;
}

export interface SceneChamber {
  id: number;
  word: number[];
  fiber: number;
  height: number;
  label: string[];
  vertex_ids: number[];
}

export interface SceneEdge {
  a: number;
  b: number;
  type: number;
}

export interface SceneStats {
  chamber_count: number;
  vertex_count: number;
  edge_count: number;
  max_distance_from_base: number;
}

export interface SceneDocument {
  schema_version: number;
  spec: SceneSpec;
  vertices: SceneVertex[];
  chambers: SceneChamber[];
  edges: SceneEdge[];
  stats: SceneStats;
}

const FAMILIES = new Set(["sph-a2", "sph-a3", "aff-a1", "aff-a2"]);

function expect(condition: boolean, path: string, message: string): asserts condition {
  if (!condition) throw new SceneFormatError(path, message);
}

function isRecord(x: unknown): x is Record<string, unknown> {
  return typeof x === "object" && x !== null && !Array.isArray(x);
}

function intAt(obj: Record<string, unknown>, path: string, key: string): number {
  const v = obj[key];
  expect(typeof v === "number" && Number.isInteger(v), `${path}.${key}`, "expected an integer");
  return v;
}

export function validateScene(data: unknown): SceneDocument {
  expect(isRecord(data), "$", "expected an object");
  expect(data.schema_version === SCHEMA_VERSION, "$.schema_version", `expected ${SCHEMA_VERSION}`);

  const specRaw = data.spec;
  expect(isRecord(specRaw), "$.spec", "expected an object");
  const family = specRaw.family;
  expect(typeof family === "string" && FAMILIES.has(family), "$.spec.family", "unknown family");
  const spec: SceneSpec = {
    family,
    p: intAt(specRaw, "$.spec", "p"),
    radius: intAt(specRaw, "$.spec", "radius"),
    height_step: num(specRaw, "$.spec", "height_step"),
    radial_step: num(specRaw, "$.spec", "radial_step"),
    embed_center: bool(specRaw, "$.spec", "embed_center"),
  };

  expect(Array.isArray(data.vertices), "$.vertices", "expected an array");
  const vertices: SceneVertex[] = (data.vertices as unknown[]).map((v, i) => {
    const path = `$.vertices[${i}]`;
    expect(isRecord(v), path, "expected an object");
    expect(v.id === i, `${path}.id`, "ids must be dense and sorted");
    const pos = v.pos;
    expect(
      Array.isArray(pos) && pos.length === 3 && pos.every((x) => typeof x === "number"),
      `${path}.pos`,
      "expected [x, y, z]",
    );
    const cotype = v.cotype;
    expect(
      Array.isArray(cotype) && cotype.every((x) => Number.isInteger(x)),
      `${path}.cotype`,
      "expected a list of wall types",
    );
    return {
      id: i,
      pos: pos as [number, number, number],
      cotype: cotype as number[],
      height: intAt(v, path, "height"),
    };
  });

  expect(Array.isArray(data.chambers), "$.chambers", "expected an array");
  const chambers: SceneChamber[] = (data.chambers as unknown[]).map((c, i) => {
    const path = `$.chambers[${i}]`;
    expect(isRecord(c), path, "expected an object");
    expect(c.id === i, `${path}.id`, "ids must be dense and sorted");
    const word = c.word;
    expect(Array.isArray(word) && word.every((x) => Number.isInteger(x)), `${path}.word`, "expected s-indices");
    const label = c.label;
    expect(
      Array.isArray(label) && label.every((s) => typeof s === "string" && s.includes("/")),
      `${path}.label`,
      "expected num/den strings",
    );
    const vertexIds = c.vertex_ids;
    expect(Array.isArray(vertexIds), `${path}.vertex_ids`, "expected a list");
    vertexIds.forEach((vid, k) => {
      expect(
        Number.isInteger(vid) && (vid as number) >= 0 && (vid as number) < vertices.length,
        `${path}.vertex_ids[${k}]`,
        `unknown vertex ${vid}`,
      );
    });
    return {
      id: i,
      word: word as number[],
      fiber: intAt(c, path, "fiber"),
      height: intAt(c, path, "height"),
      label: label as string[],
      vertex_ids: vertexIds as number[],
    };
  });

  expect(Array.isArray(data.edges), "$.edges", "expected an array");
  const edges: SceneEdge[] = (data.edges as unknown[]).map((e, i) => {
    const path = `$.edges[${i}]`;
    expect(isRecord(e), path, "expected an object");
    const a = intAt(e, path, "a");
    const b = intAt(e, path, "b");
    const type = intAt(e, path, "type");
    expect(a >= 0 && a < chambers.length, `${path}.a`, `unknown chamber ${a}`);
    expect(b >= 0 && b < chambers.length, `${path}.b`, `unknown chamber ${b}`);
    return { a, b, type };
  });

  const statsRaw = data.stats;
  expect(isRecord(statsRaw), "$.stats", "expected an object");
  const stats: SceneStats = {
    chamber_count: intAt(statsRaw, "$.stats", "chamber_count"),
    vertex_count: intAt(statsRaw, "$.stats", "vertex_count"),
    edge_count: intAt(statsRaw, "$.stats", "edge_count"),
    max_distance_from_base: intAt(statsRaw, "$.stats", "max_distance_from_base"),
  };
  expect(stats.chamber_count === chambers.length, "$.stats.chamber_count", "count mismatch");
  expect(stats.vertex_count === vertices.length, "$.stats.vertex_count", "count mismatch");
  expect(stats.edge_count === edges.length, "$.stats.edge_count", "count mismatch");

  return { schema_version: SCHEMA_VERSION, spec, vertices, chambers, edges, stats };
}

function num(obj: Record<string, unknown>, path: string, key: string): number {
  const v = obj[key];
  expect(typeof v === "number", `${path}.${key}`, "expected a number");
  return v;
}

function bool(obj: Record<string, unknown>, path: string, key: string): boolean {
  const v = obj[key];
  expect(typeof v === "boolean", `${path}.${key}`, "expected a boolean");
  return v;
}

export function parseScene(text: string): SceneDocument {
  let raw: unknown;
  try {
    raw = JSON.parse(text);
  } catch (exc) {
    throw new SceneFormatError("$", `not a JSON document (${exc})`);
  }
  return validateScene(raw);
}

/** The base chamber: empty word, fiber 0. */
export function baseChamber(doc: SceneDocument): number {
  const hit = doc.chambers.find((c) => c.word.length === 0 && c.fiber === 0);
  return hit ? hit.id : 0;
}
