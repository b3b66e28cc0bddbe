/** three.js scene construction, appearance, and picking.
 *
 * Chambers become meshes (tubes for 1-dim chambers, translucent triangles
 * for 2-dim ones), vertices become small sphere markers, and each graph edge
 * contributes a wall overlay used by the edge-type color mode. Everything is
 * pure geometry; no WebGL context is needed until a renderer attaches, so
 * the whole module is unit-testable.
 */

import * as THREE from "three";

import type { SceneDocument } from "./scene.js";
import { chamberVisible, type DocIndex, type ViewerState } from "./state.js";
import type { Gallery } from "./gallery.js";

const TYPE_COLORS = [0xe4572e, 0x17bebb, 0xffc914, 0x76b041];
const NEUTRAL = 0x8d99ae;
const SELECTED = 0xff3366;
const GALLERY = 0xffa200;

function rampColor(value: number, max: number): THREE.Color {
  const t = max > 0 ? value / max : 0;
  return new THREE.Color().setHSL(0.62 - 0.62 * t, 0.75, 0.55);
}

export interface SceneObjects {
  root: THREE.Group;
  chamberMeshes: THREE.Mesh[]; // by chamber id
  vertexMarkers: THREE.Mesh[]; // by vertex id
  wallOverlays: { object: THREE.Object3D; type: number; a: number; b: number }[];
  boundingSphere: THREE.Sphere;
  scale: number;
}

function segmentMesh(p: THREE.Vector3, q: THREE.Vector3, radius: number): THREE.Mesh {
  const direction = new THREE.Vector3().subVectors(q, p);
  const geometry = new THREE.CylinderGeometry(radius, radius, direction.length(), 10, 1);
  const mesh = new THREE.Mesh(geometry, new THREE.MeshBasicMaterial({ color: NEUTRAL }));
  mesh.position.copy(p).addScaledVector(direction, 0.5);
  mesh.quaternion.setFromUnitVectors(
    new THREE.Vector3(0, 1, 0),
    direction.clone().normalize(),
  );
  return mesh;
}

function triangleMesh(points: THREE.Vector3[]): THREE.Mesh {
  const geometry = new THREE.BufferGeometry().setFromPoints(points);
  geometry.setIndex([0, 1, 2]);
  geometry.computeVertexNormals();
  const material = new THREE.MeshBasicMaterial({
    color: NEUTRAL,
    side: THREE.DoubleSide,
    transparent: true,
    opacity: 0.8,
  });
  return new THREE.Mesh(geometry, material);
}

export function buildSceneObjects(doc: SceneDocument): SceneObjects {
  const root = new THREE.Group();
  const positions = doc.vertices.map((v) => new THREE.Vector3(...v.pos));

  const box = new THREE.Box3();
  for (const p of positions) box.expandByPoint(p);
  const boundingSphere = box.getBoundingSphere(new THREE.Sphere());
  const scale = Math.max(boundingSphere.radius, 1);

  const vertexMarkers = doc.vertices.map((v) => {
    const marker = new THREE.Mesh(
      new THREE.SphereGeometry(0.015 * scale, 12, 12),
      new THREE.MeshBasicMaterial({ color: 0x2b2d42 }),
    );
    marker.position.copy(positions[v.id]);
    marker.userData.vertexId = v.id;
    root.add(marker);
    return marker;
  });

  const chamberMeshes = doc.chambers.map((c) => {
    const pts = c.vertex_ids.map((vid) => positions[vid]);
    const mesh =
      pts.length === 2
        ? segmentMesh(pts[0], pts[1], 0.012 * scale)
        : triangleMesh(pts);
    mesh.userData.chamberId = c.id;
    mesh.userData.kind = pts.length === 2 ? "segment" : "triangle";
    root.add(mesh);
    return mesh;
  });

  // one overlay per graph edge, drawn on the shared wall
  const wallOverlays = doc.edges.map((e) => {
    const shared = doc.chambers[e.a].vertex_ids.filter((v) =>
      doc.chambers[e.b].vertex_ids.includes(v),
    );
    let object: THREE.Object3D;
    if (shared.length >= 2) {
      object = segmentMesh(positions[shared[0]], positions[shared[1]], 0.006 * scale);
    } else {
      object = new THREE.Mesh(
        new THREE.SphereGeometry(0.02 * scale, 8, 8),
        new THREE.MeshBasicMaterial({ color: NEUTRAL }),
      );
      object.position.copy(positions[shared[0]]);
    }
    object.visible = false;
    root.add(object);
    return { object, type: e.type, a: e.a, b: e.b };
  });

  root.updateMatrixWorld(true); // raycasting must work before any render
  return { root, chamberMeshes, vertexMarkers, wallOverlays, boundingSphere, scale };
}

/** Apply visibility filters, the color mode, and selection/gallery highlights. */
export function applyAppearance(
  objects: SceneObjects,
  index: DocIndex,
  state: ViewerState,
  gallery: Gallery | "unreachable" | null,
): void {
  const doc = index.doc;
  const maxWord = Math.max(...doc.chambers.map((c) => c.word.length));
  const maxHeight = Math.max(...doc.chambers.map((c) => c.height));
  const galleryIds = new Set(
    gallery !== null && gallery !== "unreachable" ? gallery.chambers : [],
  );

  doc.chambers.forEach((chamber, id) => {
    const mesh = objects.chamberMeshes[id];
    mesh.visible = chamberVisible(index, state, id);
    const material = mesh.material as THREE.MeshBasicMaterial;
    if (state.selection.includes(id)) {
      material.color.set(SELECTED);
    } else if (galleryIds.has(id)) {
      material.color.set(GALLERY);
    } else if (state.colorMode === "by-word-length") {
      material.color.copy(rampColor(chamber.word.length, maxWord));
    } else if (state.colorMode === "by-height") {
      material.color.copy(rampColor(chamber.height, maxHeight));
    } else {
      material.color.set(NEUTRAL);
    }
  });

  const showWalls = state.colorMode === "by-edge-type";
  for (const overlay of objects.wallOverlays) {
    overlay.object.visible =
      showWalls &&
      objects.chamberMeshes[overlay.a].visible &&
      objects.chamberMeshes[overlay.b].visible;
    if (overlay.object instanceof THREE.Mesh) {
      (overlay.object.material as THREE.MeshBasicMaterial).color.set(
        TYPE_COLORS[overlay.type % TYPE_COLORS.length],
      );
    }
  }

  doc.vertices.forEach((vertex, vid) => {
    const marker = objects.vertexMarkers[vid];
    const material = marker.material as THREE.MeshBasicMaterial;
    if (showWalls && vertex.cotype.length === 1) {
      material.color.set(TYPE_COLORS[vertex.cotype[0] % TYPE_COLORS.length]);
    } else {
      material.color.set(0x2b2d42);
    }
  });
}

/** The chamber hit first by the ray, or null for an empty pick. */
export function pickChamber(objects: SceneObjects, raycaster: THREE.Raycaster): number | null {
  const visible = objects.chamberMeshes.filter((m) => m.visible);
  const hits = raycaster.intersectObjects(visible, false);
  for (const hit of hits) {
    const id = hit.object.userData.chamberId;
    if (typeof id === "number") return id;
  }
  return null;
}
