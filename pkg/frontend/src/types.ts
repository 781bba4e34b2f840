export type PairStatus = "pending" | "accepted" | "rejected" | "edited";

export interface SessionPair {
  pair_id: string;
  clue: string;
  answer_display: string;
  answer_grid: string;
  source: string;
  language: string;
  status: PairStatus;
  original_clue: string | null;
  edited_clue: string | null;
  preferred: boolean;
}

export interface Session {
  session_id: string;
  created_at: string;
  pairs: SessionPair[];
  puzzle_ids: string[];
}

export interface PipelineReport {
  keywords_extracted: number;
  keywords_kept: number;
  clues_generated: number;
  clues_kept: number;
  exchange_digests: string[];
}

export interface PuzzleCell {
  row: number;
  col: number;
  letter: string;
  number?: number;
}

export interface PuzzleEntry {
  number: number;
  direction: "across" | "down";
  row: number;
  col: number;
  answer: string;
  clue: string;
}

export interface ScoreBreakdown {
  fw: number;
  ll: number;
  fr: number;
  lr: number;
  score: number;
}

export interface Puzzle {
  width: number;
  height: number;
  cells: PuzzleCell[];
  entries: PuzzleEntry[];
  score: ScoreBreakdown;
}

export interface GenerateConfig {
  width?: number;
  height?: number;
  min_words?: number;
  min_fill?: number;
  max_restarts?: number;
  max_duration?: number;
  preferred_weight?: number;
  seed?: number;
}

export interface GenerateResponse {
  puzzle_id: string;
  score: ScoreBreakdown;
}

export interface TextPipelineResponse {
  session: Session;
  report: PipelineReport;
}

export interface KeywordPipelineResponse {
  session: Session;
}

export interface ApiError {
  error_code: string;
  message: string;
}

export interface PairPatch {
  status?: PairStatus;
  edited_clue?: string;
  preferred?: boolean;
}
