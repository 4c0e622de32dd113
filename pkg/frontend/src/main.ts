import { ApiRequestError, MontyClient } from "./api.js";
import { toViewModel } from "./state.js";
import { buildSkeleton, render, showBanner } from "./ui.js";
import type { HostSpec, SessionState } from "./types.js";

export class App {
  private client: MontyClient;
  private sessionId: string | null = null;
  private busy = false;

  constructor(
    private root: HTMLElement,
    base = "",
  ) {
    this.client = new MontyClient(base);
    buildSkeleton(root, {
      onNewSession: (kind, p, prior, seed) => void this.newSession(kind, p, prior, seed),
      onPick: (door) => void this.pick(door),
      onDecide: (decision) => void this.decide(decision),
    });
  }

  // One request at a time per session; the server is the referee anyway.
  private async guard(action: () => Promise<void>): Promise<void> {
    if (this.busy) return;
    this.busy = true;
    try {
      await action();
      showBanner(this.root, null);
    } catch (error) {
      if (error instanceof ApiRequestError) {
        showBanner(this.root, `${error.code}: ${error.message}`);
      } else {
        showBanner(this.root, `network trouble: ${String(error)}`);
      }
    } finally {
      this.busy = false;
    }
  }

  private apply(state: SessionState): void {
    render(this.root, toViewModel(state));
  }

  async newSession(kind: string, p: string, prior: string, seed = ""): Promise<void> {
    await this.guard(async () => {
      const host: HostSpec = { kind: kind as HostSpec["kind"] };
      if (kind === "moody") host.p = p;
      const parsedSeed = seed.trim() === "" ? undefined : Number(seed);
      const envelope = await this.client.createSession(host, prior || undefined, parsedSeed);
      this.sessionId = envelope.session_id;
      this.apply(envelope.state);
    });
  }

  async pick(door: number): Promise<void> {
    if (this.sessionId === null) return;
    await this.guard(async () => {
      const envelope = await this.client.pick(this.sessionId!, door);
      this.apply(envelope.state);
    });
  }

  async decide(decision: "stay" | "switch"): Promise<void> {
    if (this.sessionId === null) return;
    await this.guard(async () => {
      const envelope = await this.client.decide(this.sessionId!, decision);
      this.apply(envelope.state);
    });
  }

  async refresh(): Promise<void> {
    if (this.sessionId === null) return;
    await this.guard(async () => {
      const envelope = await this.client.getSession(this.sessionId!);
      this.apply(envelope.state);
    });
  }
}

export function mountApp(root: HTMLElement, base = ""): App {
  return new App(root, base);
}
