import type { CatalogResponse, ProfileDoc, ScaleEntry } from './types.js';

// Form model behind the profile dropdowns. Slots, categories, and option
// labels are derived from the catalog response, never hardcoded.

export interface FormSlot {
  /** "<limb>.<category>" or "perception.<sense>"; doubles as the element id. */
  id: string;
  limb: string | null;
  category: string;
  scale: ScaleEntry;
}

export class ProfileForm {
  readonly limbs: string[];
  readonly limbCategories: string[];
  readonly perceptionCategories: string[];
  private scales = new Map<string, ScaleEntry>();
  private degrees = new Map<string, number>();

  constructor(catalog: CatalogResponse) {
    this.limbs = [...catalog.limbs];
    const limbCats: string[] = [];
    const perceptionCats: string[] = [];
    for (const scale of catalog.scales) {
      this.scales.set(scaleKey(scale.category, scale.limb_kind ?? null), scale);
      if (scale.limb_kind) {
        if (!limbCats.includes(scale.category)) limbCats.push(scale.category);
      } else if (!perceptionCats.includes(scale.category)) {
        perceptionCats.push(scale.category);
      }
    }
    this.limbCategories = limbCats;
    this.perceptionCategories = perceptionCats;
    for (const slot of this.slots()) this.degrees.set(slot.id, 0);
  }

  /** One entry per dropdown: every (limb, category) pair plus both senses. */
  slots(): FormSlot[] {
    const out: FormSlot[] = [];
    for (const limb of this.limbs) {
      for (const category of this.limbCategories) {
        const scale = this.scaleFor(category, kindOf(limb));
        out.push({ id: `${limb}.${category}`, limb, category, scale });
      }
    }
    for (const category of this.perceptionCategories) {
      const scale = this.scaleFor(category, null);
      out.push({ id: `perception.${category}`, limb: null, category, scale });
    }
    return out;
  }

  scaleFor(category: string, limbKind: 'arm' | 'leg' | null): ScaleEntry {
    const scale = this.scales.get(scaleKey(category, limbKind));
    if (!scale) throw new Error(`no scale for ${category}/${limbKind}`);
    return scale;
  }

  degree(slotId: string): number {
    const value = this.degrees.get(slotId);
    if (value === undefined) throw new Error(`unknown slot ${slotId}`);
    return value;
  }

  setDegree(slotId: string, degree: number): void {
    if (!this.degrees.has(slotId)) throw new Error(`unknown slot ${slotId}`);
    this.degrees.set(slotId, degree);
  }

  /**
   * Set one limb category on all limbs at once, clamping to each limb
   * kind's own scale (arm and leg ranges can differ).
   */
  applyToAllLimbs(category: string, degree: number): void {
    for (const limb of this.limbs) {
      const scale = this.scaleFor(category, kindOf(limb));
      const max = scale.levels[scale.levels.length - 1].value;
      this.setDegree(`${limb}.${category}`, Math.min(degree, max));
    }
  }

  reset(): void {
    for (const key of this.degrees.keys()) this.degrees.set(key, 0);
  }

  isZero(): boolean {
    for (const value of this.degrees.values()) if (value !== 0) return false;
    return true;
  }

  /** Explicit profile document with every slot spelled out. */
  toDocument(): ProfileDoc {
    const limbs: Record<string, Record<string, number>> = {};
    for (const limb of this.limbs) {
      limbs[limb] = {};
      for (const category of this.limbCategories) {
        limbs[limb][category] = this.degree(`${limb}.${category}`);
      }
    }
    const perception: Record<string, number> = {};
    for (const category of this.perceptionCategories) {
      perception[category] = this.degree(`perception.${category}`);
    }
    return { limbs, perception };
  }
}

function kindOf(limb: string): 'arm' | 'leg' {
  return limb.endsWith('arm') ? 'arm' : 'leg';
}

function scaleKey(category: string, limbKind: 'arm' | 'leg' | null): string {
  return `${category}|${limbKind ?? ''}`;
}
