// Mirrors of the /api/v1 payloads. The client renders only what the
// service sends; it never infers hidden state.

export type Phase = "awaiting_pick" | "awaiting_decision" | "finished";

export interface DoorState {
  door: number;
  open: boolean;
  content: "goat" | "car" | null;
}

export interface BeliefRow {
  step: number;
  action: string;
  door?: number;
  posterior_evil: string;
  posterior_evil_decimal: number;
  posterior_car: string;
  posterior_car_decimal: number;
}

export interface ProfileStats {
  stay_count: number;
  switch_count: number;
  propensity: string;
  propensity_decimal: number;
}

export interface SessionStats {
  games: number;
  wins: number;
  stay_plays: number;
  stay_wins: number;
  switch_plays: number;
  switch_wins: number;
  profile: ProfileStats;
}

export interface HostInfo {
  kind: string;
  p?: string;
  propensity?: string;
  propensity_decimal?: number;
}

export interface SessionState {
  phase: Phase;
  game_number: number;
  host: HostInfo;
  prior_evil: string;
  doors: DoorState[];
  initial_pick: number | null;
  host_action: { kind: string; door?: number } | null;
  belief: BeliefRow[];
  stats: SessionStats;
  outcome?: "win" | "lose";
  car_door?: number;
  sampled_mood?: string;
  final_decision?: string | null;
}

export interface SessionEnvelope {
  schema_version: number;
  session_id: string;
  state: SessionState;
}

export interface HostSpec {
  kind: "fair" | "evil" | "moody" | "adaptive";
  p?: string;
}
