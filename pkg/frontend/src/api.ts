import type {
  ApiError,
  GenerateConfig,
  GenerateResponse,
  KeywordPipelineResponse,
  PairPatch,
  Puzzle,
  Session,
  SessionPair,
  TextPipelineResponse,
} from "./types.js";

export class RequestFailed extends Error {
  readonly status: number;
  readonly errorCode: string;

  constructor(status: number, body: ApiError) {
    super(body.message);
    this.status = status;
    this.errorCode = body.error_code;
  }
}

async function request<T>(
  fetchFn: typeof fetch,
  url: string,
  init?: RequestInit
): Promise<T> {
  const response = await fetchFn(url, {
    ...init,
    headers: { "Content-Type": "application/json", ...(init?.headers ?? {}) },
  });
  if (!response.ok) {
    let body: ApiError;
    try {
      body = (await response.json()) as ApiError;
    } catch {
      body = { error_code: "Unknown", message: response.statusText };
    }
    throw new RequestFailed(response.status, body);
  }
  return (await response.json()) as T;
}

/** Typed client for the curation service endpoints. */
export class ApiClient {
  private readonly base: string;
  private readonly fetchFn: typeof fetch;

  constructor(base = "", fetchFn: typeof fetch = fetch) {
    this.base = base.replace(/\/$/, "");
    this.fetchFn = fetchFn;
  }

  pipelineText(document: string, lang: string): Promise<TextPipelineResponse> {
    return request(this.fetchFn, `${this.base}/api/pipeline/text`, {
      method: "POST",
      body: JSON.stringify({ document, lang }),
    });
  }

  pipelineKeywords(
    keywords: string[],
    n: number,
    lang: string
  ): Promise<KeywordPipelineResponse> {
    return request(this.fetchFn, `${this.base}/api/pipeline/keywords`, {
      method: "POST",
      body: JSON.stringify({ keywords, n, lang }),
    });
  }

  getSession(sessionId: string): Promise<Session> {
    return request(this.fetchFn, `${this.base}/api/sessions/${sessionId}`);
  }

  patchPair(
    sessionId: string,
    pairId: string,
    patch: PairPatch
  ): Promise<SessionPair> {
    return request(
      this.fetchFn,
      `${this.base}/api/sessions/${sessionId}/pairs/${pairId}`,
      { method: "PATCH", body: JSON.stringify(patch) }
    );
  }

  generate(
    sessionId: string,
    config: GenerateConfig
  ): Promise<GenerateResponse> {
    return request(
      this.fetchFn,
      `${this.base}/api/sessions/${sessionId}/generate`,
      { method: "POST", body: JSON.stringify(config) }
    );
  }

  getPuzzle(puzzleId: string): Promise<Puzzle> {
    return request(this.fetchFn, `${this.base}/api/puzzles/${puzzleId}`);
  }

  async getPuzzleText(puzzleId: string): Promise<string> {
    const response = await this.fetchFn(
      `${this.base}/api/puzzles/${puzzleId}?format=text`
    );
    if (!response.ok) {
      throw new RequestFailed(response.status, {
        error_code: "Unknown",
        message: response.statusText,
      });
    }
    return response.text();
  }
}
