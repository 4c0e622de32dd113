// DOM skeleton and render pass. Buttons for illegal moves are disabled,
// never hidden, so each phase's rules are visible.

import type { ViewModel } from "./state.js";

export interface Handlers {
  onNewSession: (kind: string, p: string, prior: string, seed: string) => void;
  onPick: (door: number) => void;
  onDecide: (decision: "stay" | "switch") => void;
}

export function buildSkeleton(root: HTMLElement, handlers: Handlers): void {
  root.innerHTML = `
    <header>
      <h1>montylab</h1>
      <form id="config" class="config">
        <label>host
          <select id="host-kind">
            <option value="moody" selected>moody</option>
            <option value="fair">fair</option>
            <option value="evil">evil</option>
            <option value="adaptive">adaptive</option>
          </select>
        </label>
        <label id="p-wrap">p <input id="host-p" value="1/2" size="5"></label>
        <label>prior <input id="prior" value="1/2" size="5"></label>
        <label>seed <input id="seed" placeholder="random" size="9"></label>
        <button type="submit" id="new-session">new session</button>
      </form>
    </header>
    <div id="banner" class="banner" hidden></div>
    <main>
      <section class="stage">
        <div id="host-label" class="host-label"></div>
        <div id="doors" class="doors">
          ${[1, 2, 3]
            .map(
              (d) => `
            <button class="door" id="door-${d}" data-door="${d}" disabled>
              <span class="door-number">${d}</span>
              <span class="door-content" id="door-content-${d}"></span>
            </button>`,
            )
            .join("")}
        </div>
        <div id="host-action" class="host-action"></div>
        <div class="decisions">
          <button id="stay" disabled>stay</button>
          <button id="switch" disabled>switch</button>
        </div>
        <div id="outcome" class="outcome"></div>
      </section>
      <aside class="panel">
        <h2>belief panel</h2>
        <dl>
          <dt>P(host is evil)</dt><dd id="belief-evil"></dd>
          <dt>P(car behind your door)</dt><dd id="belief-car"></dd>
        </dl>
        <ol id="belief-trace" class="trace"></ol>
        <h2>running stats</h2>
        <div id="stats"></div>
        <div id="studying" class="studying" hidden></div>
      </aside>
    </main>
  `;

  const form = root.querySelector<HTMLFormElement>("#config")!;
  form.addEventListener("submit", (event) => {
    event.preventDefault();
    const kind = root.querySelector<HTMLSelectElement>("#host-kind")!.value;
    const p = root.querySelector<HTMLInputElement>("#host-p")!.value;
    const prior = root.querySelector<HTMLInputElement>("#prior")!.value;
    const seed = root.querySelector<HTMLInputElement>("#seed")!.value;
    handlers.onNewSession(kind, p, prior, seed);
  });
  root.querySelector<HTMLSelectElement>("#host-kind")!.addEventListener("change", (event) => {
    const kind = (event.target as HTMLSelectElement).value;
    root.querySelector<HTMLElement>("#p-wrap")!.hidden = kind !== "moody";
  });
  for (const door of [1, 2, 3]) {
    root.querySelector<HTMLButtonElement>(`#door-${door}`)!.addEventListener("click", () => {
      handlers.onPick(door);
    });
  }
  root.querySelector<HTMLButtonElement>("#stay")!.addEventListener("click", () => handlers.onDecide("stay"));
  root.querySelector<HTMLButtonElement>("#switch")!.addEventListener("click", () => handlers.onDecide("switch"));
}

export function render(root: HTMLElement, view: ViewModel): void {
  root.querySelector<HTMLElement>("#host-label")!.textContent =
    `game ${view.gameNumber} vs ${view.hostLabel}`;

  for (const door of view.doors) {
    const button = root.querySelector<HTMLButtonElement>(`#door-${door.door}`)!;
    button.disabled = !door.selectable;
    button.classList.toggle("open", door.open);
    button.classList.toggle("picked", door.picked);
    const content = root.querySelector<HTMLElement>(`#door-content-${door.door}`)!;
    content.textContent = door.content === null ? "" : door.content === "car" ? "🚗" : "🐐";
  }

  root.querySelector<HTMLButtonElement>("#stay")!.disabled = !view.canDecide;
  root.querySelector<HTMLButtonElement>("#switch")!.disabled = !view.canDecide;

  root.querySelector<HTMLElement>("#host-action")!.textContent = view.hostActionText ?? "";
  root.querySelector<HTMLElement>("#outcome")!.textContent = view.outcomeText ?? "";

  root.querySelector<HTMLElement>("#belief-evil")!.textContent = view.beliefEvil;
  root.querySelector<HTMLElement>("#belief-car")!.textContent = view.beliefCar;

  const trace = root.querySelector<HTMLElement>("#belief-trace")!;
  trace.innerHTML = "";
  for (const row of view.beliefRows) {
    const item = document.createElement("li");
    const where = row.action === "opened_mine" ? "your door" : `door ${row.door}`;
    item.textContent =
      `${row.action.replace("_", " ")} (${where}): ` +
      `evil ${row.posterior_evil_decimal.toFixed(3)}, car ${row.posterior_car_decimal.toFixed(3)}`;
    trace.appendChild(item);
  }

  const tallies = view.tallies;
  root.querySelector<HTMLElement>("#stats")!.textContent =
    `games ${tallies.games} · wins ${tallies.wins} · ` +
    `stay ${tallies.stayWins}/${tallies.stayPlays} · switch ${tallies.switchWins}/${tallies.switchPlays}`;

  const studying = root.querySelector<HTMLElement>("#studying")!;
  if (view.studying !== null) {
    studying.hidden = false;
    studying.textContent = `the host is studying you: P(you stay) ≈ ${view.studying}`;
  } else {
    studying.hidden = true;
  }
}

export function showBanner(root: HTMLElement, message: string | null): void {
  const banner = root.querySelector<HTMLElement>("#banner")!;
  if (message === null) {
    banner.hidden = true;
    banner.textContent = "";
  } else {
    banner.hidden = false;
    banner.textContent = message;
  }
}
