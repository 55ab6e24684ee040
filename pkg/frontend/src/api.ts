import type {
  CatalogResponse,
  FieldError,
  MatchResponse,
  PlanDoc,
  ProfileDoc,
  ValidateResponse,
} from './types.js';

/** Service rejected the input with field-level errors (HTTP 422). */
export class InvalidInputError extends Error {
  constructor(readonly errors: FieldError[]) {
    super(errors.map((e) => `${e.path}: ${e.message}`).join('; '));
    this.name = 'InvalidInputError';
  }
}

/** Any other non-OK response or network failure. */
export class ServiceError extends Error {
  constructor(message: string, readonly status?: number) {
    super(message);
    this.name = 'ServiceError';
  }
}

async function readDetail(response: Response): Promise<string> {
  try {
    const body = await response.json();
    if (body && typeof body.detail === 'string') return body.detail;
  } catch {
    // non-JSON error body; fall through to the status line
  }
  return `service responded with ${response.status}`;
}

export class ApiClient {
  constructor(private baseUrl = '') {}

  private async post<T>(path: string, body: unknown): Promise<T> {
    let response: Response;
    try {
      response = await fetch(this.baseUrl + path, {
        method: 'POST',
        headers: { 'content-type': 'application/json' },
        body: JSON.stringify(body),
      });
    } catch (err) {
      throw new ServiceError(err instanceof Error ? err.message : 'network error');
    }
    if (response.status === 422) {
      const payload = await response.json();
      throw new InvalidInputError((payload.errors ?? []) as FieldError[]);
    }
    if (!response.ok) {
      throw new ServiceError(await readDetail(response), response.status);
    }
    return (await response.json()) as T;
  }

  async getCatalog(): Promise<CatalogResponse> {
    let response: Response;
    try {
      response = await fetch(this.baseUrl + '/api/catalog');
    } catch (err) {
      throw new ServiceError(err instanceof Error ? err.message : 'network error');
    }
    if (!response.ok) {
      throw new ServiceError(await readDetail(response), response.status);
    }
    return (await response.json()) as CatalogResponse;
  }

  match(profile: ProfileDoc, plan?: PlanDoc): Promise<MatchResponse> {
    const body = plan ? { profile, plan } : profile;
    return this.post<MatchResponse>('/api/match', body);
  }

  validate(profile: ProfileDoc, plan: PlanDoc): Promise<ValidateResponse> {
    return this.post<ValidateResponse>('/api/validate', { profile, plan });
  }
}
