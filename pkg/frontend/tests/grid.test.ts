import { describe, expect, it } from 'vitest';

import { buildGrid, COLOR_LABELS, summaryLine } from '../src/grid.js';
import { makeCatalog, makeReport } from './helpers.js';

describe('buildGrid', () => {
  it('produces one cell per device, in catalog order', () => {
    const catalog = makeCatalog();
    const cells = buildGrid(catalog, makeReport(catalog));
    expect(cells.map((c) => c.deviceId)).toEqual(
      catalog.devices.map((d) => d.id));
    expect(cells.map((c) => c.name)).toEqual(
      catalog.devices.map((d) => d.name));
  });

  it('labels every color with text', () => {
    const catalog = makeCatalog();
    const report = makeReport(catalog, { big_switch: 'red', wheel: 'yellow' });
    const cells = buildGrid(catalog, report);
    const byId = new Map(cells.map((c) => [c.deviceId, c]));
    expect(byId.get('big_switch')?.label).toBe(COLOR_LABELS.red);
    expect(byId.get('wheel')?.label).toBe(COLOR_LABELS.yellow);
    expect(byId.get('pedal')?.label).toBe(COLOR_LABELS.green);
  });

  it('carries per limb rows and rationale', () => {
    const catalog = makeCatalog();
    const report = makeReport(catalog, { big_switch: 'red' });
    const cell = buildGrid(catalog, report).find((c) => c.deviceId === 'big_switch');
    expect(cell?.perLimb.map((row) => row.limb)).toEqual(['left_arm', 'right_arm']);
    expect(cell?.perLimb[0]).toMatchObject({
      color: 'red', total: 2, excess: { mobility: 2 },
    });
    expect(cell?.rationale[0]).toContain('exceeds max');
  });

  it('skips devices the report does not cover', () => {
    const catalog = makeCatalog();
    const report = makeReport(catalog);
    report.verdicts = report.verdicts.filter((v) => v.device_id !== 'chime');
    const cells = buildGrid(catalog, report);
    expect(cells.map((c) => c.deviceId)).not.toContain('chime');
    expect(cells).toHaveLength(catalog.devices.length - 1);
  });
});

describe('summaryLine', () => {
  it('spells out all three buckets', () => {
    const catalog = makeCatalog();
    const report = makeReport(catalog, { big_switch: 'red', wheel: 'yellow' });
    expect(summaryLine(report)).toBe('3 usable, 1 conditional, 1 unusable');
  });
});
