// Side-panel rendering: drill-down listings, recommendations, the
// annotation form, stored annotations, triconcepts. All data arrives
// fully computed from the server.

import type {
  AnnotationRecord,
  CellResponse,
  RecommendResponse,
  TriclusterView,
  TriconceptsResponse,
  Verdict,
} from './api.js';

const VERDICTS: Verdict[] = ['meaningful', 'not_meaningful', 'unsure'];

function h(tag: string, cls: string, text?: string): HTMLElement {
  const el = document.createElement(tag);
  el.className = cls;
  if (text !== undefined) el.textContent = text;
  return el;
}

function triclusterLine(t: TriclusterView): string {
  return `[${t.extent.join(',')} | ${t.intent.join(',')} | ${t.modus.join(',')}]  rho=${t.density}`;
}

export interface DrilldownHandlers {
  onHighlightLargest?: () => void;
  onAnnotate?: (key: string) => void;
}

export function renderDrilldown(host: HTMLElement, cell: CellResponse, handlers: DrilldownHandlers = {}): void {
  host.textContent = '';
  host.appendChild(h('h3', 'panel-title', `Cell (${cell.object}, ${cell.attribute})`));
  if (cell.count === 0) {
    host.appendChild(h('p', 'empty-note', 'no triclusters through this cell'));
    return;
  }
  if (handlers.onHighlightLargest) {
    const btn = h('button', 'highlight-largest', 'highlight largest') as HTMLButtonElement;
    btn.type = 'button';
    btn.addEventListener('click', handlers.onHighlightLargest);
    host.appendChild(btn);
  }
  const list = h('ol', 'tricluster-list');
  for (const t of cell.triclusters) {
    const item = h('li', 'tricluster-item', triclusterLine(t));
    item.dataset.key = t.key;
    item.dataset.density = t.density;
    if (handlers.onAnnotate) {
      const btn = h('button', 'annotate', 'annotate') as HTMLButtonElement;
      btn.type = 'button';
      btn.addEventListener('click', () => handlers.onAnnotate!(t.key));
      item.appendChild(btn);
    }
    list.appendChild(item);
  }
  host.appendChild(list);
}

export function renderRecommendation(host: HTMLElement, rec: RecommendResponse): void {
  host.textContent = '';
  host.appendChild(h('h3', 'panel-title', `Recommendations for ${rec.user}`));
  if (rec.profile_tags.length === 0 && rec.profile_resources.length === 0) {
    host.appendChild(h('p', 'empty-note', 'no activity for this user'));
    return;
  }
  host.appendChild(h('p', 'similarity', `similarity ${rec.similarity} (${rec.similarity_float})`));
  host.appendChild(h('p', 'best', `best tricluster ${triclusterLine(rec.best)}`));
  if (rec.recommended_tags.length === 0 && rec.recommended_resources.length === 0) {
    host.appendChild(h('p', 'empty-note', 'nothing new to recommend'));
    return;
  }
  if (rec.recommended_tags.length > 0) {
    host.appendChild(h('p', 'rec-tags', `tags: ${rec.recommended_tags.join(', ')}`));
  }
  if (rec.recommended_resources.length > 0) {
    host.appendChild(h('p', 'rec-resources', `resources: ${rec.recommended_resources.join(', ')}`));
  }
}

export interface AnnotationFormHandlers {
  onSubmit: (verdict: Verdict, note: string) => void;
}

export function renderAnnotationForm(host: HTMLElement, key: string, handlers: AnnotationFormHandlers): void {
  host.textContent = '';
  const form = h('form', 'annotation-form') as HTMLFormElement;
  form.appendChild(h('h3', 'panel-title', `Annotate ${key.slice(0, 12)}`));

  for (const verdict of VERDICTS) {
    const label = h('label', 'verdict-option');
    const radio = document.createElement('input');
    radio.type = 'radio';
    radio.name = 'verdict';
    radio.value = verdict;
    label.appendChild(radio);
    label.appendChild(document.createTextNode(' ' + verdict.replace('_', ' ')));
    form.appendChild(label);
  }

  const note = document.createElement('textarea');
  note.name = 'note';
  note.placeholder = 'optional note';
  form.appendChild(note);

  const submit = document.createElement('button');
  submit.type = 'submit';
  submit.textContent = 'save verdict';
  submit.disabled = true; // enabled once a verdict is picked
  form.appendChild(submit);

  form.addEventListener('change', () => {
    submit.disabled = pickedVerdict(form) === null;
  });
  form.addEventListener('submit', (ev) => {
    ev.preventDefault();
    const verdict = pickedVerdict(form);
    if (verdict !== null) handlers.onSubmit(verdict, note.value);
  });
  host.appendChild(form);
}

function pickedVerdict(form: HTMLFormElement): Verdict | null {
  const checked = form.querySelector('input[name="verdict"]:checked') as HTMLInputElement | null;
  return checked ? (checked.value as Verdict) : null;
}

export function renderAnnotationEcho(host: HTMLElement, saved: AnnotationRecord): void {
  const echo = h(
    'p',
    'annotation-echo',
    `saved: ${saved.verdict} on ${saved.tricluster_key.slice(0, 12)} at ${saved.timestamp}`,
  );
  host.appendChild(echo);
}

export function renderAnnotations(host: HTMLElement, annotations: AnnotationRecord[]): void {
  host.textContent = '';
  host.appendChild(h('h3', 'panel-title', 'Annotations'));
  if (annotations.length === 0) {
    host.appendChild(h('p', 'empty-note', 'none yet'));
    return;
  }
  const list = h('ul', 'annotation-list');
  for (const a of annotations) {
    const item = h('li', 'annotation-item', `${a.tricluster_key.slice(0, 12)}: ${a.verdict} ${a.note && '- ' + a.note}`);
    item.dataset.key = a.tricluster_key;
    item.dataset.verdict = a.verdict;
    list.appendChild(item);
  }
  host.appendChild(list);
}

export function renderTriconcepts(host: HTMLElement, resp: TriconceptsResponse): void {
  host.textContent = '';
  host.appendChild(h('h3', 'panel-title', `Triadic concepts (${resp.count})`));
  const list = h('ul', 'triconcept-list');
  for (const c of resp.triconcepts) {
    list.appendChild(h('li', 'triconcept-item', `[${c.extent.join(',')} | ${c.intent.join(',')} | ${c.modus.join(',')}]`));
  }
  host.appendChild(list);
}

export function renderInlineError(host: HTMLElement, message: string): void {
  const el = h('p', 'inline-error', message);
  el.setAttribute('role', 'alert');
  host.appendChild(el);
}
