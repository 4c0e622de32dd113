"""Live game sessions over HTTP, for playing against the house.

A session runs one game at a time through the same engine primitives as
batch play: the car door comes from ``derive_seed(session_seed,
game_index)`` via the engine's generator, the host acts through
:func:`montylab.game.host_act`, and every finished game becomes a regular
:class:`GameTranscript` (guest kind ``human``) that replays identically
from its recorded seed and inputs.

Hosts can be fair, evil, moody(p), or ``adaptive``: an adaptive host
profiles the player's past stay/switch decisions with one pseudo-count of
smoothing per side and mind-reads the predicted intent -- predicted
stayers get the fair mood, everyone else (including a 50/50 tie, which
counts as unsure) gets evil.  Since the prediction is deterministic, an
adaptive game is mechanically a fair or evil game and is archived as such.

Hidden state (car door, sampled mood) never appears in a response until
the game is finished.
"""

from __future__ import annotations

import os
import secrets
import threading
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from pydantic import BaseModel

from . import analytics, belief
from .game import (
    DOORS,
    GameTranscript,
    GuestStrategy,
    HostAction,
    HostActionKind,
    HostKind,
    Intent,
    Mood,
    Outcome,
    ShowmasterStrategy,
    SplitMix64,
    derive_seed,
    host_act,
    resolve_mind_reader,
    write_transcripts,
)
from .probability import InvalidParameter, as_probability

SCHEMA_VERSION = 1

SESSION_HOST_KINDS = ("fair", "evil", "moody", "adaptive")


class UnknownSession(KeyError):
    """No session with that id."""


class PhaseViolation(RuntimeError):
    """A client message arrived in a phase that cannot accept it."""


class IllegalDoor(ValueError):
    """A door outside 1..3."""


class Phase:
    AWAITING_PICK = "awaiting_pick"
    AWAITING_DECISION = "awaiting_decision"
    FINISHED = "finished"


@dataclass(frozen=True)
class AdaptiveReaderModel:
    """Laplace-smoothed stay/switch profile of one player."""

    stay_count: int = 0
    switch_count: int = 0

    @property
    def propensity(self) -> Fraction:
        """Predicted probability that the player stays; in (0, 1) by smoothing."""
        return Fraction(self.stay_count + 1, self.stay_count + self.switch_count + 2)

    def predicted_intent(self) -> Intent | None:
        """Thresholded prediction; None means unsure (exact tie)."""
        propensity = self.propensity
        if propensity > Fraction(1, 2):
            return Intent.STAY
        if propensity < Fraction(1, 2):
            return Intent.SWITCH
        return None


def profile_update(model: AdaptiveReaderModel, decision: Intent) -> AdaptiveReaderModel:
    """Count one observed stay/switch decision."""
    if decision is Intent.STAY:
        return AdaptiveReaderModel(model.stay_count + 1, model.switch_count)
    return AdaptiveReaderModel(model.stay_count, model.switch_count + 1)


def _parse_host_spec(spec: dict) -> tuple[str, ShowmasterStrategy | None]:
    kind = spec.get("kind")
    if kind not in SESSION_HOST_KINDS:
        raise InvalidParameter(f"host kind must be one of {SESSION_HOST_KINDS}, got {kind!r}")
    if kind == "moody":
        if "p" not in spec:
            raise InvalidParameter("moody hosts need an evil frequency 'p'")
        return kind, ShowmasterStrategy.moody(as_probability(spec["p"], "p"))
    if kind == "adaptive":
        return kind, None
    return kind, ShowmasterStrategy(HostKind(kind))


class Session:
    """One player's seat at the show.  Single-writer: all messages locked."""

    def __init__(
        self,
        host_spec: dict,
        prior_evil=Fraction(1, 2),
        seed: int | None = None,
        archive_path: str | Path | None = None,
    ):
        self.session_id = secrets.token_hex(8)
        self.host_kind, self._strategy = _parse_host_spec(host_spec)
        self.prior_evil = as_probability(prior_evil, "prior")
        self.session_seed = secrets.randbits(64) if seed is None else seed
        self.archive_path = Path(archive_path) if archive_path else None
        self.profile = AdaptiveReaderModel()
        self.history: list[GameTranscript] = []
        self.wins = 0
        self.stay_plays = 0
        self.stay_wins = 0
        self.switch_plays = 0
        self.switch_wins = 0
        # Reentrant: pick/decide render the response while still holding it.
        self._lock = threading.RLock()
        self._game_index = 0
        self._start_game()

    # One game's worth of hidden state. Draw order matches play_game for a
    # human guest: car door first, then (after the pick arrives) the moody
    # coin, then the host's tie-break.  Adaptive moods draw nothing.
    def _start_game(self) -> None:
        self.game_seed = derive_seed(self.session_seed, self._game_index)
        self._game_index += 1
        self._rng = SplitMix64(self.game_seed)
        self._car_door = self._rng.door()
        self._mood: Mood | None = None
        self._game_showmaster: ShowmasterStrategy | None = None
        self._pick: int | None = None
        self._host_action: HostAction | None = None
        self._outcome: Outcome | None = None
        self._decision: Intent | None = None
        self._belief = belief.initial_belief(self.prior_evil)
        self.phase = Phase.AWAITING_PICK

    def _resolve_mood(self) -> None:
        if self.host_kind == "fair":
            self._mood = Mood.FAIR
        elif self.host_kind == "evil":
            self._mood = Mood.EVIL
        elif self.host_kind == "moody":
            p = self._strategy.evil_rate
            self._mood = Mood.EVIL if self._rng.chance(p.numerator, p.denominator) else Mood.FAIR
        else:  # adaptive
            predicted = self.profile.predicted_intent()
            if predicted is None:
                self._mood = Mood.EVIL
            else:
                self._mood = resolve_mind_reader(Fraction(1), predicted, self._rng)
        # Adaptive games are mechanically fair/evil games; archive them so.
        if self._strategy is not None:
            self._game_showmaster = self._strategy
        else:
            self._game_showmaster = (
                ShowmasterStrategy.fair() if self._mood is Mood.FAIR else ShowmasterStrategy.evil()
            )

    def pick(self, door: int) -> dict:
        with self._lock:
            if self.phase == Phase.AWAITING_DECISION:
                raise PhaseViolation("a pick is already on the table; decide stay or switch")
            if not isinstance(door, int) or door not in DOORS:
                raise IllegalDoor(f"door must be one of {DOORS}, got {door!r}")
            if self.phase == Phase.FINISHED:
                self._start_game()
            self._pick = door
            self._resolve_mood()
            self._host_action = host_act(self._mood, self._car_door, door, self._rng)
            self._belief = belief.update(self._belief, self._host_action)
            if self._host_action.kind is HostActionKind.OPENED_MINE:
                self._finish(decision=None, outcome=Outcome.LOSE)
            else:
                self.phase = Phase.AWAITING_DECISION
            return self.observable_state()

    def decide(self, decision: Intent) -> dict:
        with self._lock:
            if self.phase != Phase.AWAITING_DECISION:
                raise PhaseViolation("there is no open stay/switch offer in this phase")
            if decision is Intent.STAY:
                won = self._pick == self._car_door
            else:
                won = self._pick != self._car_door
            self.profile = profile_update(self.profile, decision)
            if decision is Intent.STAY:
                self.stay_plays += 1
                self.stay_wins += int(won)
            else:
                self.switch_plays += 1
                self.switch_wins += int(won)
            self._finish(decision=decision, outcome=Outcome.WIN if won else Outcome.LOSE)
            return self.observable_state()

    def _finish(self, decision: Intent | None, outcome: Outcome) -> None:
        self._decision = decision
        self._outcome = outcome
        self.wins += int(outcome is Outcome.WIN)
        transcript = GameTranscript(
            seed=self.game_seed,
            showmaster=self._game_showmaster,
            guest=GuestStrategy.human(),
            car_door=self._car_door,
            initial_pick=self._pick,
            sampled_mood=self._mood,
            signaled_intent=decision,
            host_action=self._host_action,
            final_decision=decision,
            outcome=outcome,
        )
        transcript.validate()
        self.history.append(transcript)
        if self.archive_path is not None:
            write_transcripts(self.archive_path, [transcript], append=True)
        self.phase = Phase.FINISHED

    def observable_state(self) -> dict:
        """Client-visible state; hides car and mood until the game is over."""
        with self._lock:
            return self._observable_state_locked()

    def _observable_state_locked(self) -> dict:
        finished = self.phase == Phase.FINISHED
        doors = []
        for door in DOORS:
            opened = False
            content = None
            if self._host_action is not None:
                action = self._host_action
                opened_door = self._pick if action.kind is HostActionKind.OPENED_MINE else action.door
                opened = door == opened_door
                if opened:
                    content = "goat"
            if finished:
                # Full reveal once the game is over.
                content = "car" if door == self._car_door else "goat"
            doors.append({"door": door, "open": opened, "content": content})

        state = {
            "session_id": self.session_id,
            "phase": self.phase,
            "game_number": len(self.history) + (0 if finished else 1),
            "host": {"kind": self.host_kind},
            "prior_evil": str(self.prior_evil),
            "doors": doors,
            "initial_pick": self._pick,
            "host_action": self._host_action.to_dict() if self._host_action else None,
            "belief": belief.trace_records(self._belief),
            "stats": self.stats(),
        }
        if self.host_kind == "moody":
            state["host"]["p"] = str(self._strategy.evil_rate)
        if self.host_kind == "adaptive":
            state["host"]["propensity"] = str(self.profile.propensity)
            state["host"]["propensity_decimal"] = float(self.profile.propensity)
        if finished:
            last = self.history[-1]
            state["outcome"] = last.outcome.value
            state["car_door"] = last.car_door
            state["sampled_mood"] = last.sampled_mood.value
            state["final_decision"] = last.final_decision.value if last.final_decision else None
            state["transcript"] = last.to_dict()
        return state

    def stats(self) -> dict:
        return {
            "games": len(self.history),
            "wins": self.wins,
            "stay_plays": self.stay_plays,
            "stay_wins": self.stay_wins,
            "switch_plays": self.switch_plays,
            "switch_wins": self.switch_wins,
            "profile": {
                "stay_count": self.profile.stay_count,
                "switch_count": self.profile.switch_count,
                "propensity": str(self.profile.propensity),
                "propensity_decimal": float(self.profile.propensity),
            },
        }


class SessionStore:
    """In-memory session registry; sessions die with the process."""

    def __init__(self):
        self._sessions: dict[str, Session] = {}
        self._lock = threading.Lock()

    def create(self, session: Session) -> Session:
        with self._lock:
            self._sessions[session.session_id] = session
        return session

    def get(self, session_id: str) -> Session:
        with self._lock:
            session = self._sessions.get(session_id)
        if session is None:
            raise UnknownSession(session_id)
        return session


class CreateSessionBody(BaseModel):
    host: dict
    prior: "str | float | int | None" = None
    seed: "int | None" = None


class PickBody(BaseModel):
    door: int


class DecisionBody(BaseModel):
    decision: str


def create_app(archive_path: str | Path | None = None, default_prior=Fraction(1, 2)):
    """Build the FastAPI app serving the /api/v1 surface."""
    from fastapi import FastAPI, Request
    from fastapi.responses import JSONResponse
    from fastapi.staticfiles import StaticFiles

    app = FastAPI(title="montylab", version="0.1.0")
    store = SessionStore()
    app.state.store = store

    def respond(payload: dict, status_code: int = 200) -> JSONResponse:
        return JSONResponse({"schema_version": SCHEMA_VERSION, **payload}, status_code=status_code)

    def error(status_code: int, code: str, message: str) -> JSONResponse:
        return respond({"error": {"code": code, "message": message}}, status_code)

    @app.exception_handler(UnknownSession)
    async def _unknown(request: Request, exc: UnknownSession):
        return error(404, "unknown_session", f"unknown session {exc.args[0]!r}")

    @app.exception_handler(PhaseViolation)
    async def _phase(request: Request, exc: PhaseViolation):
        return error(409, "phase_violation", str(exc))

    @app.exception_handler(IllegalDoor)
    async def _door(request: Request, exc: IllegalDoor):
        return error(422, "illegal_door", str(exc))

    @app.exception_handler(InvalidParameter)
    async def _param(request: Request, exc: InvalidParameter):
        return error(422, "invalid_parameter", str(exc))

    @app.post("/api/v1/session", status_code=201)
    def create_session(body: CreateSessionBody):
        prior = default_prior if body.prior is None else body.prior
        session = store.create(
            Session(body.host, prior_evil=prior, seed=body.seed, archive_path=archive_path)
        )
        return respond({"session_id": session.session_id, "state": session.observable_state()}, 201)

    @app.post("/api/v1/session/{session_id}/pick")
    def post_pick(session_id: str, body: PickBody):
        session = store.get(session_id)
        return respond({"session_id": session_id, "state": session.pick(body.door)})

    @app.post("/api/v1/session/{session_id}/decision")
    def post_decision(session_id: str, body: DecisionBody):
        session = store.get(session_id)
        try:
            decision = Intent(body.decision)
        except ValueError:
            raise InvalidParameter(f"decision must be 'stay' or 'switch', got {body.decision!r}")
        return respond({"session_id": session_id, "state": session.decide(decision)})

    @app.get("/api/v1/session/{session_id}")
    def get_session(session_id: str):
        session = store.get(session_id)
        return respond({"session_id": session_id, "state": session.observable_state()})

    @app.get("/api/v1/analytics")
    def get_analytics(p: str | None = None, q: str | None = None):
        def pair(value: Fraction) -> dict:
            return {"rational": str(value), "decimal": float(value)}

        payload: dict = {}
        if p is not None:
            evil_rate = as_probability(p, "p")
            payload["p"] = pair(evil_rate)
            payload["win_stay"] = pair(analytics.win_stay(evil_rate))
            payload["win_switch"] = pair(analytics.win_switch(evil_rate))
            payload["posterior_evil_given_other"] = pair(analytics.posterior_evil_given_other(evil_rate))
            payload["posterior_car_given_other"] = pair(analytics.posterior_car_given_other(evil_rate))
            payload["best_response"] = analytics.best_response(evil_rate).value
        if q is not None:
            stay_rate = as_probability(q, "q")
            payload["q"] = pair(stay_rate)
            payload["mind_reader_win_rate"] = pair(analytics.mind_reader_win_rate(stay_rate))
            payload["mind_reader_open_rate"] = pair(analytics.mind_reader_open_rate(stay_rate))
        if p is not None and q is not None:
            payload["win"] = pair(
                analytics.win_probability(as_probability(p, "p"), as_probability(q, "q"))
            )
        payload["indifference_point"] = pair(analytics.indifference_point())
        return respond(payload)

    # Serve the browser client when its build output is around.
    frontend_dist = Path(__file__).resolve().parents[2] / "frontend" / "dist"
    if frontend_dist.is_dir():
        app.mount("/", StaticFiles(directory=frontend_dist, html=True), name="frontend")

    return app


def serve(
    addr: str | None = None,
    port: int | None = None,
    archive_path: str | Path | None = None,
    prior=Fraction(1, 2),
) -> None:
    """Run the HTTP service; flags fall back to environment variables."""
    import uvicorn

    addr = addr or os.environ.get("MONTYLAB_ADDR", "127.0.0.1")
    port = port or int(os.environ.get("MONTYLAB_PORT", "8000"))
    archive_path = archive_path or os.environ.get("MONTYLAB_ARCHIVE") or None
    uvicorn.run(create_app(archive_path=archive_path, default_prior=prior), host=addr, port=port)
