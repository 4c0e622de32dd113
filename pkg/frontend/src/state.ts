// Pure view-model derivation: what each phase allows, and how the
// service's numbers are formatted. This is the only "math" the client
// does, and it is formatting only.

import type { BeliefRow, SessionState } from "./types.js";

export const BELIEF_PRECISION = 3;

export interface DoorView {
  door: number;
  open: boolean;
  content: "goat" | "car" | null;
  picked: boolean;
  selectable: boolean;
}

export interface ViewModel {
  phase: SessionState["phase"];
  gameNumber: number;
  hostLabel: string;
  studying: string | null;
  doors: DoorView[];
  canPick: boolean;
  canDecide: boolean;
  beliefEvil: string;
  beliefCar: string;
  beliefRows: BeliefRow[];
  outcomeText: string | null;
  hostActionText: string | null;
  tallies: {
    games: number;
    wins: number;
    stayPlays: number;
    stayWins: number;
    switchPlays: number;
    switchWins: number;
  };
}

export function rationalToNumber(text: string): number {
  const slash = text.indexOf("/");
  if (slash < 0) return Number(text);
  return Number(text.slice(0, slash)) / Number(text.slice(slash + 1));
}

export function formatProb(value: number): string {
  return value.toFixed(BELIEF_PRECISION);
}

export function beliefDisplay(state: SessionState): { evil: string; car: string } {
  const last = state.belief[state.belief.length - 1];
  if (last === undefined) {
    // Nothing observed this game yet: prior for the mood, 1/3 for the car.
    return { evil: formatProb(rationalToNumber(state.prior_evil)), car: formatProb(1 / 3) };
  }
  return {
    evil: formatProb(last.posterior_evil_decimal),
    car: formatProb(last.posterior_car_decimal),
  };
}

export function hostLabel(state: SessionState): string {
  const host = state.host;
  if (host.kind === "moody") return `moody host (evil with chance ${host.p})`;
  if (host.kind === "adaptive") return "adaptive mind-reading host";
  return `${host.kind} host`;
}

export function toViewModel(state: SessionState): ViewModel {
  const finished = state.phase === "finished";
  const canPick = state.phase === "awaiting_pick" || finished;
  const canDecide = state.phase === "awaiting_decision";
  const belief = beliefDisplay(state);
  let outcomeText: string | null = null;
  if (finished && state.outcome) {
    outcomeText = state.outcome === "win" ? "You drive home in the car!" : "A goat. The house thanks you.";
  }
  let hostActionText: string | null = null;
  if (state.host_action) {
    hostActionText =
      state.host_action.kind === "opened_mine"
        ? "The host threw YOUR door open: a goat. Game over."
        : `The host opened door ${state.host_action.door}: a goat.`;
  }
  return {
    phase: state.phase,
    gameNumber: state.game_number,
    hostLabel: hostLabel(state),
    studying:
      state.host.kind === "adaptive" && state.host.propensity_decimal !== undefined
        ? formatProb(state.host.propensity_decimal)
        : null,
    doors: state.doors.map((door) => ({
      door: door.door,
      open: door.open,
      content: door.content,
      picked: state.initial_pick === door.door && !finished,
      selectable: canPick,
    })),
    canPick,
    canDecide,
    beliefEvil: belief.evil,
    beliefCar: belief.car,
    beliefRows: state.belief,
    outcomeText,
    hostActionText,
    tallies: {
      games: state.stats.games,
      wins: state.stats.wins,
      stayPlays: state.stats.stay_plays,
      stayWins: state.stats.stay_wins,
      switchPlays: state.stats.switch_plays,
      switchWins: state.stats.switch_wins,
    },
  };
}
