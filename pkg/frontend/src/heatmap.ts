// Coverage grid rendering. Plain DOM, one button per cell; darkness
// comes from the shared rank shader and the exact count rides on the
// title attribute for hover.

import { CountShader } from './color.js';
import type { CellRef, HighlightRect } from './state.js';

export interface HeatmapView {
  rows: string[];
  cols: string[];
  counts: number[][];
}

export interface HeatmapHandlers {
  selected?: CellRef | null;
  highlight?: HighlightRect | null;
  onSelect?: (g: string, m: string) => void;
}

export function renderHeatmap(host: HTMLElement, view: HeatmapView, handlers: HeatmapHandlers = {}): void {
  host.textContent = '';
  const shader = new CountShader(view.counts.flat());
  const grid = document.createElement('div');
  grid.className = 'heatmap';
  grid.style.display = 'grid';
  grid.style.gridTemplateColumns = `auto repeat(${view.cols.length}, 2.6em)`;

  grid.appendChild(cornerCell());
  for (const col of view.cols) grid.appendChild(labelCell(col, 'col-label'));

  view.rows.forEach((rowLabel, i) => {
    grid.appendChild(labelCell(rowLabel, 'row-label'));
    view.cols.forEach((colLabel, j) => {
      const count = view.counts[i][j];
      const cell = document.createElement('button');
      cell.type = 'button';
      cell.className = count === 0 ? 'cell zero' : 'cell';
      cell.dataset.row = rowLabel;
      cell.dataset.col = colLabel;
      cell.dataset.count = String(count);
      cell.textContent = String(count);
      cell.title = `${rowLabel} x ${colLabel}: ${count}`;
      cell.style.backgroundColor = shader.color(count);
      if (handlers.selected && handlers.selected.g === rowLabel && handlers.selected.m === colLabel) {
        cell.classList.add('selected');
      }
      const hl = handlers.highlight;
      if (hl && hl.rows.includes(rowLabel) && hl.cols.includes(colLabel)) {
        cell.classList.add('outlined');
        cell.style.outline = '2px solid #1a6ee0';
      }
      if (handlers.onSelect) {
        cell.addEventListener('click', () => handlers.onSelect!(rowLabel, colLabel));
      }
      grid.appendChild(cell);
    });
  });
  host.appendChild(grid);
}

/** Replace the grid with an explicit failure banner; never leave a stale grid up. */
export function renderErrorBanner(host: HTMLElement, message: string): void {
  host.textContent = '';
  const banner = document.createElement('div');
  banner.className = 'error-banner';
  banner.setAttribute('role', 'alert');
  banner.textContent = message;
  host.appendChild(banner);
}

function cornerCell(): HTMLElement {
  const el = document.createElement('div');
  el.className = 'corner';
  return el;
}

function labelCell(text: string, cls: string): HTMLElement {
  const el = document.createElement('div');
  el.className = cls;
  el.textContent = text;
  return el;
}
