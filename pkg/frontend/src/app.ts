// Orchestration: owns the view state, talks to the service, renders into
// the three page regions. Responses apply only while their epoch is
// current, so a slow reply can never repaint over a newer one.

import { HttpError, WorkbenchClient } from './api.js';
import type { HeatmapResponse, Plane, Verdict } from './api.js';
import { renderErrorBanner, renderHeatmap } from './heatmap.js';
import {
  renderAnnotationEcho,
  renderAnnotationForm,
  renderAnnotations,
  renderDrilldown,
  renderInlineError,
  renderRecommendation,
  renderTriconcepts,
} from './panels.js';
import { EpochGate, WorkbenchState } from './state.js';

export class Workbench {
  readonly state = new WorkbenchState();
  private readonly gate = new EpochGate();
  private readonly status: HTMLElement;
  private readonly gridHost: HTMLElement;
  private readonly panelHost: HTMLElement;
  private lastGrid: HeatmapResponse | null = null;

  constructor(
    root: HTMLElement,
    private readonly api: WorkbenchClient,
  ) {
    this.status = region(root, 'status');
    this.gridHost = region(root, 'grid-host');
    this.panelHost = region(root, 'panel-host');
  }

  async loadContext(tsv: string): Promise<void> {
    const shape = await this.api.loadContextTsv(tsv);
    this.lastGrid = null;
    this.gridHost.textContent = '';
    this.panelHost.textContent = '';
    this.status.textContent =
      `context: ${shape.objects} x ${shape.attributes} x ${shape.conditions}, ` +
      `${shape.incidences} incidences`;
  }

  async startRun(rhoMin: string): Promise<void> {
    const run = await this.api.startRun(rhoMin);
    this.state.setRun(run.rho_key);
    this.status.textContent = `run rho_min=${run.rho_min}: ${run.count} triclusters`;
    await this.refreshHeatmap();
  }

  async setPlane(plane: Plane): Promise<void> {
    this.state.setPlane(plane);
    await this.refreshHeatmap();
  }

  async refreshHeatmap(): Promise<void> {
    const run = this.requireRun();
    const epoch = this.gate.begin('grid');
    try {
      const grid = await this.api.heatmap(run, this.state.view.plane);
      if (!this.gate.isCurrent('grid', epoch)) return;
      this.lastGrid = grid;
      this.state.setGrid(grid.rows, grid.cols);
      this.paintGrid();
    } catch (err) {
      if (!this.gate.isCurrent('grid', epoch)) return;
      this.lastGrid = null;
      renderErrorBanner(this.gridHost, describe(err));
    }
  }

  /** Drill into one grid cell; only meaningful on the GM plane. */
  async selectCell(g: string, m: string): Promise<void> {
    const run = this.requireRun();
    this.state.selectCell(g, m);
    this.paintGrid();
    const epoch = this.gate.begin('panel');
    try {
      const cell = await this.api.cell(run, g, m);
      if (!this.gate.isCurrent('panel', epoch)) return;
      this.state.learnKeys(cell.triclusters.map((t) => t.key));
      this.state.setPanel('triclusters');
      renderDrilldown(this.panelHost, cell, {
        onHighlightLargest: () => void this.highlightLargest(),
        onAnnotate: (key) => this.openAnnotationForm(key),
      });
    } catch (err) {
      if (!this.gate.isCurrent('panel', epoch)) return;
      this.panelHost.textContent = '';
      renderInlineError(this.panelHost, describe(err));
    }
  }

  /** Outline the largest tricluster through the selected cell on the grid. */
  async highlightLargest(): Promise<void> {
    const run = this.requireRun();
    const cell = this.state.view.cell;
    if (!cell) throw new RangeError('no cell selected');
    const res = await this.api.largest(run, cell.g, cell.m);
    if (res.tricluster === null) return;
    this.state.learnKeys([res.tricluster.key]);
    this.state.setHighlight(res.tricluster.key, {
      rows: res.tricluster.extent,
      cols: res.tricluster.intent,
    });
    this.paintGrid();
  }

  async showRecommendation(user: string): Promise<void> {
    const run = this.requireRun();
    const epoch = this.gate.begin('panel');
    try {
      const rec = await this.api.recommend(run, user);
      if (!this.gate.isCurrent('panel', epoch)) return;
      this.state.learnKeys([rec.best.key]);
      this.state.setPanel('recommendations');
      renderRecommendation(this.panelHost, rec);
    } catch (err) {
      if (!this.gate.isCurrent('panel', epoch)) return;
      this.panelHost.textContent = '';
      renderInlineError(this.panelHost, describe(err));
    }
  }

  async showTriconcepts(): Promise<void> {
    const epoch = this.gate.begin('panel');
    try {
      const resp = await this.api.triconcepts();
      if (!this.gate.isCurrent('panel', epoch)) return;
      this.state.setPanel('triconcepts');
      renderTriconcepts(this.panelHost, resp);
    } catch (err) {
      if (!this.gate.isCurrent('panel', epoch)) return;
      this.panelHost.textContent = '';
      renderInlineError(this.panelHost, describe(err));
    }
  }

  async showAnnotations(): Promise<void> {
    const epoch = this.gate.begin('panel');
    try {
      const resp = await this.api.annotations();
      if (!this.gate.isCurrent('panel', epoch)) return;
      this.state.setPanel('annotations');
      renderAnnotations(this.panelHost, resp.annotations);
    } catch (err) {
      if (!this.gate.isCurrent('panel', epoch)) return;
      this.panelHost.textContent = '';
      renderInlineError(this.panelHost, describe(err));
    }
  }

  openAnnotationForm(key: string): void {
    renderAnnotationForm(this.panelHost, key, {
      onSubmit: (verdict, note) => void this.submitAnnotation(key, verdict, note),
    });
  }

  async submitAnnotation(key: string, verdict: Verdict, note: string): Promise<void> {
    try {
      const saved = await this.api.annotate(key, verdict, note);
      renderAnnotationEcho(this.panelHost, saved);
    } catch (err) {
      renderInlineError(this.panelHost, describe(err));
    }
  }

  private paintGrid(): void {
    if (!this.lastGrid) return;
    renderHeatmap(this.gridHost, this.lastGrid, {
      selected: this.state.view.cell,
      highlight: this.state.view.highlightRect,
      onSelect: (g, m) => void this.selectCell(g, m),
    });
  }

  private requireRun(): string {
    const run = this.state.view.run;
    if (run === null) throw new RangeError('no active run; start one first');
    return run;
  }
}

function region(root: HTMLElement, cls: string): HTMLElement {
  const el = document.createElement('div');
  el.className = cls;
  root.appendChild(el);
  return el;
}

function describe(err: unknown): string {
  if (err instanceof HttpError) return `request failed: ${err.detail}`;
  return `request failed: ${String(err)}`;
}
