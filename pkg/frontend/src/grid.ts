import type { CatalogResponse, Color, MatchResponse, Verdict } from './types.js';

// View model for the device grid: one cell per device, carrying everything
// the renderer needs without reaching back into the raw report.

export const COLOR_LABELS: Record<Color, string> = {
  green: 'usable',
  yellow: 'check with designer',
  red: 'unusable',
};

export interface LimbRow {
  limb: string;
  color: Color;
  total: number;
  excess: Record<string, number>;
}

export interface GridCell {
  deviceId: string;
  name: string;
  deviceClass: string;
  color: Color;
  /** Text label shown inside the cell so color is never the only signal. */
  label: string;
  perLimb: LimbRow[];
  rationale: string[];
}

export function buildGrid(catalog: CatalogResponse, report: MatchResponse): GridCell[] {
  const byId = new Map<string, Verdict>();
  for (const verdict of report.verdicts) byId.set(verdict.device_id, verdict);

  const cells: GridCell[] = [];
  for (const device of catalog.devices) {
    const verdict = byId.get(device.id);
    if (!verdict) continue;
    cells.push({
      deviceId: device.id,
      name: device.name,
      deviceClass: device.class,
      color: verdict.color,
      label: COLOR_LABELS[verdict.color],
      perLimb: Object.entries(verdict.per_limb).map(([limb, entry]) => ({
        limb,
        color: entry.color,
        total: entry.total,
        excess: entry.excess,
      })),
      rationale: [...verdict.rationale],
    });
  }
  return cells;
}

export function summaryLine(report: MatchResponse): string {
  const s = report.summary;
  return `${s.green} usable, ${s.yellow} conditional, ${s.red} unusable`;
}
