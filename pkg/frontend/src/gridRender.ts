import type { Puzzle, PuzzleEntry } from "./types.js";

export interface RenderCell {
  letter: string | null;
  number: number | null;
  blocked: boolean;
}

export interface RenderModel {
  rows: RenderCell[][];
  across: PuzzleEntry[];
  down: PuzzleEntry[];
}

/**
 * Turn the puzzle JSON into a dense row-major render model.
 *
 * The service decides layout and numbering; this only expands the sparse
 * cell list into a rectangle of cells so the view layer can paint it
 * without any crossword knowledge of its own.
 */
export function buildRenderModel(puzzle: Puzzle): RenderModel {
  const rows: RenderCell[][] = [];
  for (let r = 0; r < puzzle.height; r++) {
    const row: RenderCell[] = [];
    for (let c = 0; c < puzzle.width; c++) {
      row.push({ letter: null, number: null, blocked: true });
    }
    rows.push(row);
  }
  for (const cell of puzzle.cells) {
    if (
      cell.row < 0 ||
      cell.row >= puzzle.height ||
      cell.col < 0 ||
      cell.col >= puzzle.width
    ) {
      throw new Error(`cell out of bounds: (${cell.row}, ${cell.col})`);
    }
    rows[cell.row][cell.col] = {
      letter: cell.letter,
      number: cell.number ?? null,
      blocked: false,
    };
  }
  const byNumber = (a: PuzzleEntry, b: PuzzleEntry) => a.number - b.number;
  return {
    rows,
    across: puzzle.entries.filter((e) => e.direction === "across").sort(byNumber),
    down: puzzle.entries.filter((e) => e.direction === "down").sort(byNumber),
  };
}

/** Plain-text preview of the grid, one character per cell. */
export function renderText(model: RenderModel): string {
  return model.rows
    .map((row) =>
      row.map((cell) => (cell.blocked ? "." : cell.letter ?? "?")).join(" ")
    )
    .join("\n");
}
