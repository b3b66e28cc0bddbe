/** DOM wiring: canvas, orbit controls, file/URL loading, picking, info panel. */

import * as THREE from "three";
import { OrbitControls } from "three/addons/controls/OrbitControls.js";

import { parseScene, SceneFormatError, type SceneDocument } from "./scene.js";
import {
  chamberInfo,
  indexDocument,
  initialState,
  selectChamber,
  selectionGallery,
  setApartmentOnly,
  setColorMode,
  setMaxDistance,
  type ColorMode,
  type DocIndex,
  type ViewerState,
} from "./state.js";
import { applyAppearance, buildSceneObjects, pickChamber, type SceneObjects } from "./render.js";

const canvas = document.getElementById("viewport") as HTMLCanvasElement;
const banner = document.getElementById("banner") as HTMLDivElement;
const panel = document.getElementById("panel") as HTMLDivElement;
const fileInput = document.getElementById("scene-file") as HTMLInputElement;
const colorSelect = document.getElementById("color-mode") as HTMLSelectElement;
const distanceInput = document.getElementById("max-distance") as HTMLInputElement;
const apartmentToggle = document.getElementById("apartment-only") as HTMLInputElement;

const renderer = new THREE.WebGLRenderer({ canvas, antialias: true });
renderer.setPixelRatio(window.devicePixelRatio);
const scene = new THREE.Scene();
scene.background = new THREE.Color(0xf4f4f8);
const camera = new THREE.PerspectiveCamera(50, 1, 0.01, 500);
const controls = new OrbitControls(camera, canvas);

let state: ViewerState = initialState;
let index: DocIndex | null = null;
let objects: SceneObjects | null = null;

function resize(): void {
  const width = canvas.clientWidth || canvas.parentElement!.clientWidth;
  const height = canvas.clientHeight || canvas.parentElement!.clientHeight;
  renderer.setSize(width, height, false);
  camera.aspect = width / height;
  camera.updateProjectionMatrix();
}

function frameScene(): void {
  if (!objects) return;
  const { center, radius } = objects.boundingSphere;
  controls.target.copy(center);
  camera.position.copy(center).add(new THREE.Vector3(0.6, -1.6, 1.1).multiplyScalar(Math.max(radius, 1) * 1.6));
  camera.near = Math.max(radius / 100, 0.001);
  camera.far = radius * 20 + 10;
  camera.updateProjectionMatrix();
  controls.update();
}

function showError(message: string): void {
  banner.textContent = message;
  banner.style.display = "block";
}

function clearError(): void {
  banner.style.display = "none";
}

function loadDocument(doc: SceneDocument): void {
  if (objects) scene.remove(objects.root);
  index = indexDocument(doc);
  objects = buildSceneObjects(doc);
  scene.add(objects.root);
  state = { ...initialState };
  distanceInput.max = String(doc.stats.max_distance_from_base);
  distanceInput.value = distanceInput.max;
  frameScene();
  refresh();
}

function loadText(text: string): void {
  try {
    loadDocument(parseScene(text));
    clearError();
  } catch (exc) {
    if (exc instanceof SceneFormatError) {
      showError(`invalid scene: ${exc.message}`);
    } else {
      showError(`failed to load scene: ${exc}`);
    }
  }
}

function describeSelection(): string {
  if (!index || state.selection.length === 0) {
    return "<em>Click a chamber to inspect it; click a second one for a minimal gallery.</em>";
  }
  const parts = state.selection.map((id) => {
    const info = chamberInfo(index!, id);
    const rows = info.labelRows
      .map((row) => `<tr>${row.map((x) => `<td>${x}</td>`).join("")}</tr>`)
      .join("");
    return (
      `<h3>chamber ${info.id}</h3>` +
      `<p>word [${info.word.join(", ")}] &middot; fiber ${info.fiber} &middot; ` +
      `height ${info.height} &middot; distance ${info.distance ?? "?"}</p>` +
      `<table class="label">${rows}</table>`
    );
  });
  const gallery = selectionGallery(index, state);
  if (gallery === "unreachable") {
    parts.push("<p><strong>outside generated ball</strong>: no gallery in this scene</p>");
  } else if (gallery !== null) {
    parts.push(
      `<p>gallery length ${gallery.distance}, word [${gallery.word.join(", ")}]</p>`,
    );
  }
  return parts.join("");
}

function refresh(): void {
  if (!index || !objects) return;
  applyAppearance(objects, index, state, selectionGallery(index, state));
  panel.innerHTML = describeSelection();
}

canvas.addEventListener("click", (event) => {
  if (!objects) return;
  const rect = canvas.getBoundingClientRect();
  const ndc = new THREE.Vector2(
    ((event.clientX - rect.left) / rect.width) * 2 - 1,
    -((event.clientY - rect.top) / rect.height) * 2 + 1,
  );
  const raycaster = new THREE.Raycaster();
  raycaster.setFromCamera(ndc, camera);
  state = selectChamber(state, pickChamber(objects, raycaster));
  refresh();
});

fileInput.addEventListener("change", async () => {
  const file = fileInput.files?.[0];
  if (file) loadText(await file.text());
});

colorSelect.addEventListener("change", () => {
  state = setColorMode(state, colorSelect.value as ColorMode);
  refresh();
});

distanceInput.addEventListener("input", () => {
  const value = Number(distanceInput.value);
  const max = Number(distanceInput.max);
  state = setMaxDistance(state, value >= max ? null : value);
  refresh();
});

apartmentToggle.addEventListener("change", () => {
  state = setApartmentOnly(state, apartmentToggle.checked);
  refresh();
});

window.addEventListener("resize", () => {
  resize();
});

const sceneUrl = new URLSearchParams(window.location.search).get("scene");
if (sceneUrl) {
  fetch(sceneUrl)
    .then((r) => {
      if (!r.ok) throw new Error(`${r.status} ${r.statusText}`);
      return r.text();
    })
    .then(loadText)
    .catch((exc) => showError(`failed to fetch ${sceneUrl}: ${exc}`));
}

resize();
renderer.setAnimationLoop(() => {
  controls.update();
  renderer.render(scene, camera);
});
