// Typed client for the tricluster service. Every analytical number on
// screen comes from these endpoints; the client never recomputes counts,
// densities or argmaxes locally.

export type Plane = 'GM' | 'GB' | 'MB';

export type ContextShape = {
  objects: number;
  attributes: number;
  conditions: number;
  incidences: number;
  duplicates: number;
};

export type RunSummary = {
  rho_min: string;
  rho_key: string;
  count: number;
  density_histogram: number[];
};

export type HeatmapResponse = {
  plane: Plane;
  rows: string[];
  cols: string[];
  counts: number[][];
};

export type TriclusterView = {
  key: string;
  extent: string[];
  intent: string[];
  modus: string[];
  density: string;
  density_float: number;
  volume: number;
};

export type CellResponse = {
  object: string;
  attribute: string;
  count: number;
  triclusters: TriclusterView[];
};

export type LargestResponse = {
  tricluster: TriclusterView | null;
};

export type ListingResponse = {
  total: number;
  offset: number;
  items: TriclusterView[];
};

export type RecommendResponse = {
  user: string;
  best: TriclusterView;
  similarity: string;
  similarity_float: number;
  recommended_tags: string[];
  recommended_resources: string[];
  profile_tags: string[];
  profile_resources: string[];
};

export type TriconceptsResponse = {
  count: number;
  triconcepts: { extent: string[]; intent: string[]; modus: string[] }[];
};

export type Verdict = 'meaningful' | 'not_meaningful' | 'unsure';

export type AnnotationRecord = {
  tricluster_key: string;
  verdict: Verdict;
  note: string;
  timestamp: string;
};

export type AnnotationsResponse = { annotations: AnnotationRecord[] };

/** Thresholds spell '/' as '_' inside URL paths: 5/6 -> 5_6. */
export function rhoToken(rho: string): string {
  return rho.replace('/', '_');
}

export class HttpError extends Error {
  constructor(
    readonly status: number,
    readonly detail: string,
  ) {
    super(`HTTP ${status}: ${detail}`);
  }
}

export class WorkbenchClient {
  private readonly base: string;

  constructor(baseUrl: string) {
    this.base = baseUrl.replace(/\/+$/, '');
  }

  private async request<T>(method: string, path: string, body?: string, contentType?: string): Promise<T> {
    const headers: Record<string, string> = { Accept: 'application/json' };
    if (contentType) headers['Content-Type'] = contentType;
    const res = await fetch(this.base + path, { method, headers, body });
    if (!res.ok) {
      let detail = res.statusText;
      try {
        const parsed = (await res.json()) as { detail?: string };
        if (parsed.detail) detail = parsed.detail;
      } catch {
        // non-JSON error body; keep the status text
      }
      throw new HttpError(res.status, detail);
    }
    return (await res.json()) as T;
  }

  loadContextTsv(tsv: string): Promise<ContextShape> {
    return this.request('POST', '/context', tsv, 'text/tab-separated-values');
  }

  startRun(rhoMin: string): Promise<RunSummary> {
    return this.request('POST', '/runs', JSON.stringify({ rho_min: rhoMin }), 'application/json');
  }

  heatmap(rho: string, plane: Plane): Promise<HeatmapResponse> {
    return this.request('GET', `/runs/${rhoToken(rho)}/heatmap?plane=${plane}`);
  }

  cell(rho: string, g: string, m: string): Promise<CellResponse> {
    return this.request('GET', `/runs/${rhoToken(rho)}/cell/${encodeURIComponent(g)}/${encodeURIComponent(m)}`);
  }

  largest(rho: string, g: string, m: string, by: 'volume' | 'extent' = 'volume'): Promise<LargestResponse> {
    return this.request(
      'GET',
      `/runs/${rhoToken(rho)}/cell/${encodeURIComponent(g)}/${encodeURIComponent(m)}/largest?by=${by}`,
    );
  }

  listing(rho: string, offset = 0, limit = 100): Promise<ListingResponse> {
    return this.request('GET', `/runs/${rhoToken(rho)}/triclusters?offset=${offset}&limit=${limit}`);
  }

  recommend(rho: string, user: string): Promise<RecommendResponse> {
    return this.request('GET', `/runs/${rhoToken(rho)}/recommend/${encodeURIComponent(user)}`);
  }

  triconcepts(): Promise<TriconceptsResponse> {
    return this.request('GET', '/concepts/tri');
  }

  annotations(): Promise<AnnotationsResponse> {
    return this.request('GET', '/annotations');
  }

  annotate(key: string, verdict: Verdict, note: string): Promise<AnnotationRecord> {
    return this.request(
      'POST',
      '/annotations',
      JSON.stringify({ tricluster_key: key, verdict, note }),
      'application/json',
    );
  }
}
