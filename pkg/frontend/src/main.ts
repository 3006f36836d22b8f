import { setupViewer } from "./app.js";

function readFile(input: HTMLInputElement): Promise<string | null> {
  const file = input.files?.[0];
  if (!file) {
    return Promise.resolve(null);
  }
  return file.text();
}

async function fetchText(url: string): Promise<string> {
  const response = await fetch(url);
  if (!response.ok) {
    throw new Error(`fetch ${url}: ${response.status}`);
  }
  return response.text();
}

function boot(): void {
  const app = setupViewer(document);
  const leftInput = document.getElementById("left-file") as HTMLInputElement;
  const rightInput = document.getElementById("right-file") as HTMLInputElement;
  const resultInput = document.getElementById("result-file") as HTMLInputElement;

  async function loadFromInputs(): Promise<void> {
    const [left, right, result] = await Promise.all([
      readFile(leftInput),
      readFile(rightInput),
      readFile(resultInput),
    ]);
    if (left !== null && right !== null && result !== null) {
      app.load(left, right, result);
    }
  }

  for (const input of [leftInput, rightInput, resultInput]) {
    input.addEventListener("change", () => void loadFromInputs());
  }

  const params = new URLSearchParams(window.location.search);
  const leftUrl = params.get("left");
  const rightUrl = params.get("right");
  const resultUrl = params.get("result");
  if (leftUrl && rightUrl && resultUrl) {
    void Promise.all([fetchText(leftUrl), fetchText(rightUrl), fetchText(resultUrl)])
      .then(([left, right, result]) => app.load(left, right, result))
      .catch((exc: Error) => {
        const banner = document.getElementById("banner");
        if (banner) {
          banner.textContent = exc.message;
          banner.className = "banner error";
          banner.hidden = false;
        }
      });
  }
}

if (document.readyState === "loading") {
  document.addEventListener("DOMContentLoaded", boot);
} else {
  boot();
}
