// End-to-end flows against the recorded fixture service: the grid, the
// drill-down panel, highlighting, annotations, and failure handling.

import { afterEach, describe, expect, it, vi } from 'vitest';

import { WorkbenchClient } from '../src/api.js';
import { Workbench } from '../src/app.js';
import { fixtureServer, hslLightness } from './mockServer.js';
import type { MockServer } from './mockServer.js';

const TSV = [
  'u1\ti1\ts1',
  'u1\ti1\ts3',
  'u1\ti2\ts2',
  'u1\ti2\ts4',
  'u2\ti1\ts1',
  'u2\ti1\ts3',
  'u2\ti2\ts2',
  'u3\ti1\ts1',
  'u3\ti1\ts3',
  'u3\ti2\ts2',
  'u3\ti2\ts4',
].join('\n');

function mount(): HTMLElement {
  const root = document.createElement('div');
  document.body.appendChild(root);
  return root;
}

async function readyWorkbench(server: MockServer): Promise<{ wb: Workbench; root: HTMLElement }> {
  vi.stubGlobal('fetch', server.fetch);
  const root = mount();
  const wb = new Workbench(root, new WorkbenchClient('http://service.test'));
  await wb.loadContext(TSV);
  await wb.startRun('0');
  return { wb, root };
}

function gridCells(root: HTMLElement): HTMLButtonElement[] {
  return Array.from(root.querySelectorAll('button.cell'));
}

function cellAt(root: HTMLElement, g: string, m: string): HTMLButtonElement {
  const el = root.querySelector(`button.cell[data-row="${g}"][data-col="${m}"]`);
  if (!el) throw new Error(`no cell (${g}, ${m}) in the grid`);
  return el as HTMLButtonElement;
}

const flush = () => new Promise<void>((resolve) => setTimeout(resolve, 0));

afterEach(() => {
  vi.unstubAllGlobals();
  document.body.textContent = '';
});

describe('coverage grid', () => {
  it('renders one cell per object-attribute pair', async () => {
    const { root } = await readyWorkbench(fixtureServer());
    const cells = gridCells(root);
    expect(cells).toHaveLength(6);
    const labels = cells.map((c) => `${c.dataset.row}/${c.dataset.col}`);
    expect(labels).toEqual(['u1/i1', 'u1/i2', 'u2/i1', 'u2/i2', 'u3/i1', 'u3/i2']);
  });

  it('paints a higher count strictly darker', async () => {
    const { root } = await readyWorkbench(fixtureServer());
    const light = hslLightness(cellAt(root, 'u1', 'i1').style.backgroundColor); // count 1
    const dark = hslLightness(cellAt(root, 'u1', 'i2').style.backgroundColor); // count 3
    expect(dark).toBeLessThan(light);
  });

  it('routes a cell click into the drill-down panel', async () => {
    const { root } = await readyWorkbench(fixtureServer());
    cellAt(root, 'u2', 'i2').click();
    await flush();
    expect(root.querySelector('.panel-host .panel-title')?.textContent).toBe('Cell (u2, i2)');
    expect(cellAt(root, 'u2', 'i2').classList.contains('selected')).toBe(true);
  });
});

describe('drill-down', () => {
  it('lists exactly the triclusters through (u2, i2), densest first', async () => {
    const { wb, root } = await readyWorkbench(fixtureServer());
    await wb.selectCell('u2', 'i2');
    const items = Array.from(root.querySelectorAll('.tricluster-list li'));
    expect(items).toHaveLength(2);
    expect(items.map((li) => (li as HTMLElement).dataset.density)).toEqual(['1/1', '5/6']);
  });

  it('shows as many entries as the grid cell advertises, for every cell', async () => {
    const { wb, root } = await readyWorkbench(fixtureServer());
    for (const cell of gridCells(root)) {
      const { row, col, count } = cell.dataset;
      await wb.selectCell(row!, col!);
      const items = root.querySelectorAll('.tricluster-list li');
      expect(items.length, `cell (${row}, ${col})`).toBe(Number(count));
    }
  });
});

describe('highlighting', () => {
  it('outlines every grid cell covered by the largest tricluster', async () => {
    const { wb, root } = await readyWorkbench(fixtureServer());
    await wb.selectCell('u1', 'i2');
    await wb.highlightLargest();
    const outlined = Array.from(root.querySelectorAll('.cell.outlined')) as HTMLElement[];
    expect(outlined).toHaveLength(3); // {u1,u2,u3} x {i2}
    expect(outlined.every((c) => c.dataset.col === 'i2')).toBe(true);
    expect(wb.state.view.highlightKey).toMatch(/^6fa38bd7/);
  });

  it('clears the highlight when the plane changes', async () => {
    const { wb, root } = await readyWorkbench(fixtureServer());
    await wb.selectCell('u1', 'i2');
    await wb.highlightLargest();
    wb.state.setPlane('GB');
    expect(wb.state.view.highlightKey).toBeNull();
    expect(wb.state.view.cell).toBeNull();
    void root;
  });
});

describe('annotations', () => {
  it('saves a verdict through the form and survives a reload', async () => {
    const server = fixtureServer();
    const { wb, root } = await readyWorkbench(server);
    await wb.selectCell('u2', 'i2');
    const firstItem = root.querySelector('.tricluster-list li') as HTMLElement;
    const key = firstItem.dataset.key!;
    (firstItem.querySelector('button.annotate') as HTMLButtonElement).click();

    const form = root.querySelector('form.annotation-form') as HTMLFormElement;
    const submit = form.querySelector('button[type="submit"]') as HTMLButtonElement;
    expect(submit.disabled).toBe(true); // no verdict picked yet

    const radio = form.querySelector('input[value="meaningful"]') as HTMLInputElement;
    radio.checked = true;
    radio.dispatchEvent(new Event('change', { bubbles: true }));
    expect(submit.disabled).toBe(false);

    (form.querySelector('textarea') as HTMLTextAreaElement).value = 'checks out';
    form.dispatchEvent(new Event('submit', { bubbles: true, cancelable: true }));
    await flush();
    expect(root.querySelector('.annotation-echo')?.textContent).toContain('saved: meaningful');
    expect(server.annotationLog).toHaveLength(1);

    // Reload: a fresh workbench against the same server still sees it.
    const root2 = mount();
    const wb2 = new Workbench(root2, new WorkbenchClient('http://service.test'));
    await wb2.showAnnotations();
    const saved = root2.querySelector('.annotation-list li') as HTMLElement;
    expect(saved.dataset.key).toBe(key);
    expect(saved.dataset.verdict).toBe('meaningful');
    expect(saved.textContent).toContain('checks out');
  });
});

describe('failure handling', () => {
  it('replaces the grid with an error banner when the heatmap fetch fails', async () => {
    const server = fixtureServer();
    let fail = false;
    vi.stubGlobal('fetch', (async (input: RequestInfo | URL, init?: RequestInit) => {
      if (fail && String(input).includes('/heatmap')) {
        return new Response(JSON.stringify({ detail: 'backend exploded' }), { status: 500 });
      }
      return server.fetch(input, init);
    }) as typeof fetch);

    const root = mount();
    const wb = new Workbench(root, new WorkbenchClient('http://service.test'));
    await wb.loadContext(TSV);
    await wb.startRun('0');
    expect(gridCells(root)).toHaveLength(6);

    fail = true;
    await wb.refreshHeatmap();
    const banner = root.querySelector('.error-banner');
    expect(banner?.getAttribute('role')).toBe('alert');
    expect(banner?.textContent).toContain('backend exploded');
    expect(gridCells(root)).toHaveLength(0); // no stale grid behind the banner
  });

  it('drops a slow heatmap response that loses the race', async () => {
    const server = fixtureServer();
    let releaseSlow!: () => void;
    const slowGate = new Promise<void>((resolve) => {
      releaseSlow = resolve;
    });
    let heatmapCalls = 0;
    vi.stubGlobal('fetch', (async (input: RequestInfo | URL, init?: RequestInit) => {
      if (String(input).includes('/heatmap')) {
        heatmapCalls += 1;
        if (heatmapCalls === 1) {
          await slowGate;
          const stale = { plane: 'GM', rows: ['zz'], cols: ['yy'], counts: [[9]] };
          return new Response(JSON.stringify(stale), { status: 200 });
        }
      }
      return server.fetch(input, init);
    }) as typeof fetch);

    const root = mount();
    const wb = new Workbench(root, new WorkbenchClient('http://service.test'));
    await wb.loadContext(TSV);
    const first = wb.startRun('0'); // its heatmap hangs on the gate
    await flush(); // let the run start and the slow request begin
    await wb.refreshHeatmap(); // newer request wins immediately
    expect(gridCells(root)).toHaveLength(6);

    releaseSlow();
    await first;
    expect(gridCells(root)).toHaveLength(6);
    expect(root.querySelector('[data-count="9"]')).toBeNull();
  });
});
