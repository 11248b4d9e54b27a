// View state for the single-user workbench, plus the response-epoch
// bookkeeping that keeps slow responses from clobbering newer ones.

export type PanelMode = 'triclusters' | 'triconcepts' | 'recommendations' | 'annotations';

export interface CellRef {
  g: string;
  m: string;
}

export interface HighlightRect {
  rows: string[];
  cols: string[];
}

export interface ViewState {
  plane: 'GM' | 'GB' | 'MB';
  run: string | null;
  cell: CellRef | null;
  highlightKey: string | null;
  highlightRect: HighlightRect | null;
  panel: PanelMode;
}

export function initialViewState(): ViewState {
  return {
    plane: 'GM',
    run: null,
    cell: null,
    highlightKey: null,
    highlightRect: null,
    panel: 'triclusters',
  };
}

/**
 * Holds the state and enforces its two referential invariants: a selected
 * cell names labels of the current grid, and a highlight names a tricluster
 * key the server returned for the active run.
 */
export class WorkbenchState {
  readonly view = initialViewState();
  private gridRows: string[] = [];
  private gridCols: string[] = [];
  private knownKeys = new Set<string>();

  setGrid(rows: string[], cols: string[]): void {
    this.gridRows = rows;
    this.gridCols = cols;
    if (this.view.cell && !this.cellInGrid(this.view.cell)) {
      this.view.cell = null;
    }
  }

  private cellInGrid(cell: CellRef): boolean {
    return this.gridRows.includes(cell.g) && this.gridCols.includes(cell.m);
  }

  setRun(rhoKey: string): void {
    if (this.view.run !== rhoKey) {
      this.view.run = rhoKey;
      this.view.cell = null;
      this.clearHighlight();
      this.knownKeys = new Set();
    }
  }

  setPlane(plane: ViewState['plane']): void {
    if (this.view.plane !== plane) {
      this.view.plane = plane;
      this.view.cell = null;
      this.clearHighlight();
    }
  }

  selectCell(g: string, m: string): void {
    const cell = { g, m };
    if (!this.cellInGrid(cell)) {
      throw new RangeError(`cell (${g}, ${m}) is outside the current grid`);
    }
    this.view.cell = cell;
  }

  clearCell(): void {
    this.view.cell = null;
  }

  /** Record tricluster keys the server returned for the active run. */
  learnKeys(keys: Iterable<string>): void {
    for (const k of keys) this.knownKeys.add(k);
  }

  setHighlight(key: string, rect: HighlightRect): void {
    if (!this.knownKeys.has(key)) {
      throw new RangeError(`tricluster ${key} was never returned for this run`);
    }
    this.view.highlightKey = key;
    this.view.highlightRect = rect;
  }

  clearHighlight(): void {
    this.view.highlightKey = null;
    this.view.highlightRect = null;
  }

  setPanel(panel: PanelMode): void {
    this.view.panel = panel;
  }
}

/**
 * One counter per panel. Each request takes a fresh epoch before firing
 * and applies its response only while still current, so at most one
 * request per panel can win and stale grids are never painted.
 */
export class EpochGate {
  private readonly epochs = new Map<string, number>();

  begin(panel: string): number {
    const next = (this.epochs.get(panel) ?? 0) + 1;
    this.epochs.set(panel, next);
    return next;
  }

  isCurrent(panel: string, epoch: number): boolean {
    return this.epochs.get(panel) === epoch;
  }
}
