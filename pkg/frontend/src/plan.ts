import type { Color, MatchResponse, PlanDoc } from './types.js';

// Plan panel model: process type plus a device selection constrained by the
// latest match report. Red devices cannot be selected; selections that turn
// red after a profile change are dropped.

export type ProcessType = 'sequential' | 'flexible';

export interface DeviceOption {
  deviceId: string;
  checked: boolean;
  disabled: boolean;
  /** Tooltip for disabled checkboxes and flag text for yellow picks. */
  note: string | null;
}

export class PlanPanel {
  processType: ProcessType = 'sequential';
  /** True once the user touched the panel; validation only runs after that. */
  touched = false;
  private selected = new Set<string>();
  private colors = new Map<string, Color>();

  setProcessType(value: ProcessType): void {
    this.processType = value;
    this.touched = true;
  }

  /** Sync selectability with a fresh report; returns true if picks changed. */
  updateColors(report: MatchResponse): boolean {
    this.colors = new Map(report.verdicts.map((v) => [v.device_id, v.color]));
    let dropped = false;
    for (const id of [...this.selected]) {
      if (this.colors.get(id) === 'red') {
        this.selected.delete(id);
        dropped = true;
      }
    }
    return dropped;
  }

  toggle(deviceId: string, checked: boolean): void {
    this.touched = true;
    if (checked && this.colors.get(deviceId) !== 'red') {
      this.selected.add(deviceId);
    } else {
      this.selected.delete(deviceId);
    }
  }

  option(deviceId: string): DeviceOption {
    const color = this.colors.get(deviceId);
    if (color === 'red') {
      return {
        deviceId,
        checked: false,
        disabled: true,
        note: 'unusable for this profile',
      };
    }
    const checked = this.selected.has(deviceId);
    return {
      deviceId,
      checked,
      disabled: false,
      note: checked && color === 'yellow' ? 'designer validation required' : null,
    };
  }

  selection(): string[] {
    return [...this.selected];
  }

  toDocument(): PlanDoc {
    return { process_type: this.processType, devices: this.selection() };
  }

  reset(): void {
    this.processType = 'sequential';
    this.touched = false;
    this.selected.clear();
  }
}
