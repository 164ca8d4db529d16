import type { EvaluateRequest, EvaluateResponse } from "./types.js";

type Runner = (request: EvaluateRequest, signal: AbortSignal) => Promise<EvaluateResponse>;

export interface SchedulerCallbacks {
  onResult: (response: EvaluateResponse, request: EvaluateRequest) => void;
  onError: (message: string, request: EvaluateRequest) => void;
}

/**
 * Debounced, superseding evaluation pipeline.
 *
 * Every `schedule` call restarts the debounce timer; when it fires, the
 * previous in-flight request is aborted and a new one is issued under a
 * fresh token.  A response (or error) is delivered only while its token is
 * still the latest, so the view can never show a stale evaluation.
 */
export class EvaluationScheduler {
  private timer: ReturnType<typeof setTimeout> | null = null;
  private controller: AbortController | null = null;
  private token = 0;

  constructor(
    private readonly run: Runner,
    private readonly callbacks: SchedulerCallbacks,
    private readonly debounceMs = 150,
  ) {}

  /** Queue an evaluation of `request` after the debounce interval. */
  schedule(request: EvaluateRequest): void {
    if (this.timer !== null) clearTimeout(this.timer);
    this.timer = setTimeout(() => {
      this.timer = null;
      this.dispatch(request);
    }, this.debounceMs);
  }

  /** Evaluate immediately (preset loads skip the debounce). */
  dispatch(request: EvaluateRequest): void {
    if (this.timer !== null) {
      clearTimeout(this.timer);
      this.timer = null;
    }
    this.controller?.abort();
    const controller = new AbortController();
    this.controller = controller;
    const token = ++this.token;
    this.run(request, controller.signal).then(
      (response) => {
        if (token === this.token) this.callbacks.onResult(response, request);
      },
      (error: unknown) => {
        if (token !== this.token) return;
        if (error instanceof DOMException && error.name === "AbortError") return;
        const message = error instanceof Error ? error.message : String(error);
        this.callbacks.onError(message, request);
      },
    );
  }

  /** Tokens issued so far (for tests). */
  get issued(): number {
    return this.token;
  }
}
