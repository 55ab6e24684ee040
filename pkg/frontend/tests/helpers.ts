import type {
  CatalogResponse,
  Color,
  MatchResponse,
  ScaleEntry,
  Verdict,
} from '../src/types.js';

// Test doubles shaped like real service responses. Intentionally NOT the
// built-in device set: the UI must work purely from what the service sends.

export const LIMB_CATEGORIES = [
  'amputation_dysmelia',
  'mobility',
  'paralysis',
  'movement_disturbance',
  'pressure_sensitivity',
];

export const LIMBS = ['left_arm', 'right_arm', 'left_leg', 'right_leg'];

function levels(labels: string[]): { value: number; label: string }[] {
  return labels.map((label, value) => ({ value, label }));
}

export function makeScales(): ScaleEntry[] {
  const scales: ScaleEntry[] = [];
  for (const kind of ['arm', 'leg'] as const) {
    for (const category of LIMB_CATEGORIES) {
      const count = category === 'amputation_dysmelia' && kind === 'arm' ? 5 : 3;
      scales.push({
        category,
        limb_kind: kind,
        levels: levels(Array.from(
          { length: count }, (_, i) => `${kind} ${category} level ${i}`)),
      });
    }
  }
  for (const category of ['vision', 'hearing']) {
    scales.push({
      category,
      levels: levels(['none', 'partial limitation', 'total limitation']),
    });
  }
  return scales;
}

export function makeCatalog(): CatalogResponse {
  return {
    version: 'test-1',
    limbs: [...LIMBS],
    scales: makeScales(),
    devices: [
      { id: 'big_switch', name: 'Big switch', class: 'one_dim_input',
        arm: { mobility: 2 } },
      { id: 'wheel', name: 'Wheel', class: 'multi_dim_input',
        arm: { mobility: 0 }, perception: { vision: 0 } },
      { id: 'pedal', name: 'Pedal', class: 'multi_dim_input',
        leg: { mobility: 1 } },
      { id: 'lamp', name: 'Lamp', class: 'output', modality: 'visual',
        perception: { vision: 0 } },
      { id: 'chime', name: 'Chime', class: 'output', modality: 'auditory',
        perception: { hearing: 0 } },
    ],
  };
}

export function verdictFor(deviceId: string, color: Color, limbs: string[]): Verdict {
  const perLimb: Verdict['per_limb'] = {};
  const total = color === 'green' ? 0 : color === 'yellow' ? 1 : 2;
  for (const limb of limbs) {
    perLimb[limb] = {
      color,
      excess: total ? { mobility: total } : {},
      total,
    };
  }
  return {
    device_id: deviceId,
    color,
    per_limb: perLimb,
    perception_excess: { excess: {}, total: 0 },
    rationale: total ? [`${limbs[0]}: mobility degree 2 exceeds max 0 by ${total}`] : [],
  };
}

/** Report where every device has the given color (default green). */
export function makeReport(
  catalog: CatalogResponse,
  colors: Record<string, Color> = {},
): MatchResponse {
  const verdicts = catalog.devices.map((device) => {
    const color = colors[device.id] ?? 'green';
    const limbs = device.arm ? ['left_arm', 'right_arm']
      : device.leg ? ['left_leg', 'right_leg'] : ['body'];
    return verdictFor(device.id, color, limbs);
  });
  const summary: Record<Color, number> = { green: 0, yellow: 0, red: 0 };
  for (const verdict of verdicts) summary[verdict.color] += 1;
  return {
    profile_digest: 'x'.repeat(64),
    catalog_version: catalog.version,
    summary,
    verdicts,
    findings: [],
  };
}
