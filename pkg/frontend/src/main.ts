// Entry point: reads the server base URL, builds the toolbar, and hands
// the page regions to the controller.

import { WorkbenchClient } from './api.js';
import type { Plane } from './api.js';
import { Workbench } from './app.js';

function serverBase(): string {
  const meta = document.querySelector('meta[name="triscope-server"]') as HTMLMetaElement | null;
  return meta?.content || 'http://127.0.0.1:8765';
}

function boot(): void {
  const root = document.getElementById('app');
  if (!root) throw new Error('missing #app mount point');

  const bench = new Workbench(root as HTMLElement, new WorkbenchClient(serverBase()));
  const bar = document.createElement('div');
  bar.className = 'toolbar';
  root.insertBefore(bar, root.firstChild);

  const tsv = document.createElement('textarea');
  tsv.placeholder = 'object<TAB>attribute<TAB>condition per line';
  bar.appendChild(tsv);
  addButton(bar, 'load context', () => void bench.loadContext(tsv.value));

  const rho = document.createElement('input');
  rho.value = '0';
  rho.size = 6;
  bar.appendChild(rho);
  addButton(bar, 'mine', () => void bench.startRun(rho.value));

  const plane = document.createElement('select');
  for (const p of ['GM', 'GB', 'MB']) {
    const opt = document.createElement('option');
    opt.value = p;
    opt.textContent = p;
    plane.appendChild(opt);
  }
  plane.addEventListener('change', () => void bench.setPlane(plane.value as Plane));
  bar.appendChild(plane);

  const user = document.createElement('input');
  user.placeholder = 'user label';
  user.size = 8;
  bar.appendChild(user);
  addButton(bar, 'recommend', () => void bench.showRecommendation(user.value));
  addButton(bar, 'triconcepts', () => void bench.showTriconcepts());
  addButton(bar, 'annotations', () => void bench.showAnnotations());
}

function addButton(host: HTMLElement, label: string, onClick: () => void): void {
  const btn = document.createElement('button');
  btn.type = 'button';
  btn.textContent = label;
  btn.addEventListener('click', onClick);
  host.appendChild(btn);
}

boot();
