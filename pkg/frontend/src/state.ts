import type { ApiClient } from "./api.js";
import type { PairPatch, PairStatus, Session, SessionPair } from "./types.js";

export type Listener = (session: Session) => void;

/**
 * Client-side view of one curation session.
 *
 * Mutations are applied optimistically so the review list stays snappy,
 * then confirmed against the server response. A rejected request (for
 * example an invalid status transition) rolls the pair back to the
 * snapshot taken before the call.
 */
export class SessionStore {
  private session: Session | null = null;
  private readonly api: ApiClient;
  private readonly listeners: Listener[] = [];

  constructor(api: ApiClient) {
    this.api = api;
  }

  get current(): Session | null {
    return this.session;
  }

  subscribe(listener: Listener): void {
    this.listeners.push(listener);
  }

  load(session: Session): void {
    this.session = session;
    this.notify();
  }

  async refresh(sessionId: string): Promise<void> {
    this.load(await this.api.getSession(sessionId));
  }

  pair(pairId: string): SessionPair {
    const found = this.session?.pairs.find((p) => p.pair_id === pairId);
    if (!found) {
      throw new Error(`unknown pair ${pairId}`);
    }
    return found;
  }

  /** Pairs eligible for grid generation. */
  curatedPairs(): SessionPair[] {
    if (!this.session) {
      return [];
    }
    return this.session.pairs.filter(
      (p) => p.status === "accepted" || p.status === "edited"
    );
  }

  setStatus(pairId: string, status: PairStatus): Promise<SessionPair> {
    return this.applyPatch(pairId, { status }, (p) => {
      p.status = status;
    });
  }

  editClue(pairId: string, editedClue: string): Promise<SessionPair> {
    return this.applyPatch(pairId, { edited_clue: editedClue }, (p) => {
      p.edited_clue = editedClue;
      p.status = "edited";
    });
  }

  togglePreferred(pairId: string): Promise<SessionPair> {
    const next = !this.pair(pairId).preferred;
    return this.applyPatch(pairId, { preferred: next }, (p) => {
      p.preferred = next;
    });
  }

  private async applyPatch(
    pairId: string,
    patch: PairPatch,
    optimistic: (pair: SessionPair) => void
  ): Promise<SessionPair> {
    if (!this.session) {
      throw new Error("no session loaded");
    }
    const pair = this.pair(pairId);
    const snapshot: SessionPair = { ...pair };
    optimistic(pair);
    this.notify();
    try {
      const confirmed = await this.api.patchPair(
        this.session.session_id,
        pairId,
        patch
      );
      Object.assign(pair, confirmed);
      this.notify();
      return pair;
    } catch (err) {
      Object.assign(pair, snapshot);
      this.notify();
      throw err;
    }
  }

  private notify(): void {
    if (!this.session) {
      return;
    }
    for (const listener of this.listeners) {
      listener(this.session);
    }
  }
}
