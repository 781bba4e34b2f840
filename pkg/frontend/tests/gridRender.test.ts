import { describe, expect, it } from "vitest";

import { buildRenderModel, renderText } from "../src/gridRender.js";
import type { Puzzle } from "../src/types.js";

import golden from "./fixtures/golden_puzzle.json";

const puzzle = golden as Puzzle;

describe("buildRenderModel", () => {
  it("expands the sparse cells into a full rectangle", () => {
    const model = buildRenderModel(puzzle);
    expect(model.rows).toHaveLength(puzzle.height);
    for (const row of model.rows) {
      expect(row).toHaveLength(puzzle.width);
    }
  });

  it("places every letter and leaves the rest blocked", () => {
    const model = buildRenderModel(puzzle);
    let open = 0;
    for (const cell of puzzle.cells) {
      const rendered = model.rows[cell.row][cell.col];
      expect(rendered.blocked).toBe(false);
      expect(rendered.letter).toBe(cell.letter);
    }
    for (const row of model.rows) {
      for (const cell of row) {
        if (!cell.blocked) {
          open += 1;
        }
      }
    }
    expect(open).toBe(puzzle.cells.length);
  });

  it("carries the numbering onto the right cells only", () => {
    const model = buildRenderModel(puzzle);
    const expected = new Map(
      puzzle.cells
        .filter((c) => c.number !== undefined)
        .map((c) => [`${c.row},${c.col}`, c.number as number])
    );
    for (let r = 0; r < puzzle.height; r++) {
      for (let c = 0; c < puzzle.width; c++) {
        const rendered = model.rows[r][c];
        expect(rendered.number).toBe(expected.get(`${r},${c}`) ?? null);
      }
    }
  });

  it("splits entries by direction and sorts them by number", () => {
    const model = buildRenderModel(puzzle);
    expect(model.across.map((e) => e.number)).toEqual([1, 4]);
    expect(model.down.map((e) => e.number)).toEqual([2, 3]);
    expect(model.across[0].answer).toBe("RICERCA");
    expect(model.down[0].answer).toBe("CONOSCENZE");
  });

  it("spells each entry along the grid cells", () => {
    const model = buildRenderModel(puzzle);
    for (const entry of puzzle.entries) {
      const letters: string[] = [];
      for (let i = 0; i < entry.answer.length; i++) {
        const r = entry.direction === "down" ? entry.row + i : entry.row;
        const c = entry.direction === "across" ? entry.col + i : entry.col;
        letters.push(model.rows[r][c].letter ?? "");
      }
      expect(letters.join("")).toBe(entry.answer);
    }
  });

  it("rejects cells outside the declared rectangle", () => {
    const bad: Puzzle = {
      ...puzzle,
      cells: [{ row: puzzle.height, col: 0, letter: "A" }],
    };
    expect(() => buildRenderModel(bad)).toThrow(/out of bounds/);
  });
});

describe("renderText", () => {
  it("draws blocked cells as dots and letters as themselves", () => {
    const text = renderText(buildRenderModel(puzzle));
    const lines = text.split("\n");
    expect(lines).toHaveLength(puzzle.height);
    expect(lines[4].split(" ").slice(1, 8).join("")).toBe("RICERCA");
    expect(lines[0]).toBe(Array(puzzle.width).fill(".").join(" "));
  });
});
