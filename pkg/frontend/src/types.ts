// Wire formats of the three service endpoints. The UI holds no device or
// scale data of its own; everything here is shaped by what the service sends.

export type Color = 'green' | 'yellow' | 'red';

export type DeviceClass = 'one_dim_input' | 'multi_dim_input' | 'output';

export interface ScaleLevel {
  value: number;
  label: string;
}

export interface ScaleEntry {
  category: string;
  limb_kind?: 'arm' | 'leg';
  levels: ScaleLevel[];
}

export interface DeviceEntry {
  id: string;
  name: string;
  class: DeviceClass;
  modality?: 'visual' | 'auditory';
  arm?: Record<string, number>;
  leg?: Record<string, number>;
  perception?: Record<string, number>;
}

export interface CatalogResponse {
  version: string;
  devices: DeviceEntry[];
  limbs: string[];
  scales: ScaleEntry[];
}

export interface LimbEntry {
  color: Color;
  excess: Record<string, number>;
  total: number;
}

export interface Verdict {
  device_id: string;
  color: Color;
  per_limb: Record<string, LimbEntry>;
  perception_excess: { excess: Record<string, number>; total: number };
  rationale: string[];
}

export interface Finding {
  severity: 'error' | 'warning';
  code: string;
  message: string;
}

export interface MatchResponse {
  profile_digest: string;
  catalog_version: string;
  summary: Record<Color, number>;
  verdicts: Verdict[];
  findings: Finding[];
}

export interface ValidateResponse {
  catalog_version: string;
  feasible: boolean;
  findings: Finding[];
}

export interface FieldError {
  path: string;
  message: string;
}

export interface ProfileDoc {
  limbs: Record<string, Record<string, number>>;
  perception: Record<string, number>;
}

export interface PlanDoc {
  process_type: 'sequential' | 'flexible';
  devices: string[];
}
