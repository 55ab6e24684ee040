import { ApiClient, InvalidInputError } from './api.js';
import { debounce, type Debounced } from './debounce.js';
import { PlanPanel } from './plan.js';
import { ProfileForm } from './profile.js';
import type {
  CatalogResponse,
  FieldError,
  Finding,
  MatchResponse,
} from './types.js';

export const DEBOUNCE_MS = 150;

// 'current': grid shows the report for the form as it stands.
// 'pending': an edit happened; a (debounced) request is on its way.
// 'stale':   the last request failed; the grid still shows older data.
export type GridStatus = 'current' | 'pending' | 'stale';

/**
 * Single-page state machine. At most one match request is authoritative at
 * any time: every request takes a ticket, and a response is dropped unless
 * its ticket is still the newest (last-write-wins).
 */
export class AppStore {
  catalog: CatalogResponse | null = null;
  form: ProfileForm | null = null;
  plan = new PlanPanel();

  report: MatchResponse | null = null;
  gridStatus: GridStatus = 'pending';
  fieldErrors: FieldError[] = [];
  planFindings: Finding[] = [];
  planFeasible: boolean | null = null;
  /** Set when the catalog cannot be fetched; blocks the whole page. */
  loadError: string | null = null;

  private matchTicket = 0;
  private validateTicket = 0;
  private scheduledMatch: Debounced<[]>;
  private listeners = new Set<() => void>();

  constructor(private api: ApiClient, debounceMs: number = DEBOUNCE_MS) {
    this.scheduledMatch = debounce(() => {
      void this.runMatch();
    }, debounceMs);
  }

  subscribe(listener: () => void): () => void {
    this.listeners.add(listener);
    return () => this.listeners.delete(listener);
  }

  private emit(): void {
    for (const listener of this.listeners) listener();
  }

  /** Fetch the catalog and run the first match. */
  async init(): Promise<void> {
    this.loadError = null;
    this.emit();
    try {
      this.catalog = await this.api.getCatalog();
    } catch (err) {
      this.loadError = err instanceof Error ? err.message : String(err);
      this.emit();
      return;
    }
    this.form = new ProfileForm(this.catalog);
    await this.runMatch();
  }

  /** Dropdown change: update the form and schedule a debounced re-match. */
  setDegree(slotId: string, degree: number): void {
    if (!this.form) return;
    this.form.setDegree(slotId, degree);
    this.gridStatus = 'pending';
    this.emit();
    this.scheduledMatch();
  }

  applyToAllLimbs(category: string, degree: number): void {
    if (!this.form) return;
    this.form.applyToAllLimbs(category, degree);
    this.gridStatus = 'pending';
    this.emit();
    this.scheduledMatch();
  }

  /** Back to the first-load state, without refetching the catalog. */
  async reset(): Promise<void> {
    if (!this.form) return;
    this.scheduledMatch.cancel();
    this.form.reset();
    this.plan.reset();
    this.fieldErrors = [];
    this.planFindings = [];
    this.planFeasible = null;
    this.gridStatus = 'pending';
    this.emit();
    await this.runMatch();
  }

  private async runMatch(): Promise<void> {
    if (!this.form) return;
    const ticket = ++this.matchTicket;
    try {
      const report = await this.api.match(this.form.toDocument());
      if (ticket !== this.matchTicket) return;
      this.report = report;
      this.gridStatus = 'current';
      this.fieldErrors = [];
      const dropped = this.plan.updateColors(report);
      this.emit();
      if (this.plan.touched && (dropped || this.plan.selection().length > 0)) {
        await this.runValidate();
      }
    } catch (err) {
      if (ticket !== this.matchTicket) return;
      if (err instanceof InvalidInputError) {
        this.fieldErrors = err.errors;
        this.gridStatus = 'stale';
      } else {
        this.gridStatus = 'stale';
      }
      this.emit();
    }
  }

  setProcessType(value: 'sequential' | 'flexible'): void {
    this.plan.setProcessType(value);
    this.emit();
    void this.runValidate();
  }

  toggleDevice(deviceId: string, checked: boolean): void {
    this.plan.toggle(deviceId, checked);
    this.emit();
    void this.runValidate();
  }

  private async runValidate(): Promise<void> {
    if (!this.form || !this.plan.touched) return;
    const ticket = ++this.validateTicket;
    try {
      const result = await this.api.validate(
        this.form.toDocument(), this.plan.toDocument());
      if (ticket !== this.validateTicket) return;
      this.planFindings = result.findings;
      this.planFeasible = result.feasible;
    } catch {
      if (ticket !== this.validateTicket) return;
      this.planFeasible = null;
    }
    this.emit();
  }
}
