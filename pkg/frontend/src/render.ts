import { buildGrid, summaryLine, type GridCell } from './grid.js';
import type { AppStore } from './store.js';
import type { FormSlot } from './profile.js';
import type { Finding } from './types.js';

// DOM rendering. Dropdowns and checkboxes are (re)built once per catalog;
// report updates only touch classes and text, so open <details> cells and
// focus survive live re-matching.

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  attrs: Record<string, string> = {},
  text?: string,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  for (const [key, value] of Object.entries(attrs)) node.setAttribute(key, value);
  if (text !== undefined) node.textContent = text;
  return node;
}

function titleCase(key: string): string {
  return key.replaceAll('_', ' ');
}

function slotSelect(store: AppStore, slot: FormSlot): HTMLElement {
  const wrap = el('label', { class: 'slot', for: `slot-${slot.id}` });
  wrap.append(el('span', { class: 'slot-name' }, titleCase(slot.category)));
  const select = el('select', { id: `slot-${slot.id}`, 'data-slot': slot.id });
  for (const level of slot.scale.levels) {
    select.append(el('option', { value: String(level.value) }, level.label));
  }
  select.addEventListener('change', () => {
    store.setDegree(slot.id, Number(select.value));
  });
  wrap.append(select);
  return wrap;
}

export function renderForm(store: AppStore, root: HTMLElement): void {
  const form = store.form;
  if (!form) return;
  root.replaceChildren();

  const slots = form.slots();
  for (const limb of form.limbs) {
    const section = el('fieldset', { class: 'limb', 'data-limb': limb });
    section.append(el('legend', {}, titleCase(limb)));
    for (const slot of slots.filter((s) => s.limb === limb)) {
      section.append(slotSelect(store, slot));
    }
    root.append(section);
  }

  const senses = el('fieldset', { class: 'limb', 'data-limb': 'perception' });
  senses.append(el('legend', {}, 'perception'));
  for (const slot of slots.filter((s) => s.limb === null)) {
    senses.append(slotSelect(store, slot));
  }
  root.append(senses);

  // One "apply to all limbs" control per limb category, addressing the
  // tedium of entering the same degree four times.
  const all = el('fieldset', { class: 'limb apply-all' });
  all.append(el('legend', {}, 'apply to all limbs'));
  for (const category of form.limbCategories) {
    const wrap = el('label', { class: 'slot' });
    wrap.append(el('span', { class: 'slot-name' }, titleCase(category)));
    const select = el('select', { 'data-apply-all': category });
    const scale = form.scaleFor(category, 'arm');
    for (const level of scale.levels) {
      select.append(el('option', { value: String(level.value) }, level.label));
    }
    select.addEventListener('change', () => {
      store.applyToAllLimbs(category, Number(select.value));
      syncFormSelects(store, root);
    });
    wrap.append(select);
    all.append(wrap);
  }
  root.append(all);
}

export function syncFormSelects(store: AppStore, root: HTMLElement): void {
  const form = store.form;
  if (!form) return;
  for (const select of root.querySelectorAll<HTMLSelectElement>('select[data-slot]')) {
    select.value = String(form.degree(select.dataset.slot as string));
  }
  for (const select of root.querySelectorAll<HTMLSelectElement>('select[data-apply-all]')) {
    select.value = '0';
  }
}

function limbDetail(cell: GridCell): HTMLElement {
  const body = el('div', { class: 'cell-detail' });
  for (const row of cell.perLimb) {
    const parts = Object.entries(row.excess)
      .map(([category, amount]) => `${titleCase(category)} +${amount}`)
      .join(', ');
    body.append(el(
      'p',
      { class: `limb-row color-${row.color}` },
      `${titleCase(row.limb)}: ${row.color} (excess ${row.total}` +
        (parts ? `: ${parts})` : ')'),
    ));
  }
  for (const line of cell.rationale) {
    body.append(el('p', { class: 'rationale' }, line));
  }
  return body;
}

export function renderGrid(store: AppStore, root: HTMLElement): void {
  if (!store.catalog || !store.report) return;
  const openIds = new Set(
    [...root.querySelectorAll<HTMLDetailsElement>('details[open]')]
      .map((d) => d.dataset.device ?? ''),
  );
  root.replaceChildren();
  for (const cell of buildGrid(store.catalog, store.report)) {
    const details = el('details', {
      class: `cell color-${cell.color}`,
      'data-device': cell.deviceId,
    });
    if (openIds.has(cell.deviceId)) details.open = true;
    const summary = el('summary', {});
    summary.append(el('span', { class: 'device-name' }, cell.name));
    summary.append(el('span', { class: 'cell-label' }, cell.label));
    details.append(summary);
    details.append(limbDetail(cell));
    root.append(details);
  }
}

function findingBanner(finding: Finding): HTMLElement {
  return el(
    'p',
    { class: `banner banner-${finding.severity}` },
    `${finding.severity}: [${finding.code}] ${finding.message}`,
  );
}

export function renderPlan(store: AppStore, root: HTMLElement): void {
  if (!store.catalog) return;
  root.replaceChildren();

  const typeWrap = el('label', { class: 'slot', for: 'process-type' });
  typeWrap.append(el('span', { class: 'slot-name' }, 'process type'));
  const typeSelect = el('select', { id: 'process-type' });
  typeSelect.append(el('option', { value: 'sequential' }, 'sequential (fixed order)'));
  typeSelect.append(el('option', { value: 'flexible' }, 'flexible (choose among options)'));
  typeSelect.value = store.plan.processType;
  typeSelect.addEventListener('change', () => {
    store.setProcessType(typeSelect.value as 'sequential' | 'flexible');
  });
  typeWrap.append(typeSelect);
  root.append(typeWrap);

  const list = el('div', { class: 'device-picks' });
  for (const device of store.catalog.devices) {
    const option = store.plan.option(device.id);
    const label = el('label', { class: 'pick' });
    const box = el('input', { type: 'checkbox', 'data-pick': device.id });
    box.checked = option.checked;
    box.disabled = option.disabled;
    if (option.disabled && option.note) label.title = option.note;
    box.addEventListener('change', () => {
      store.toggleDevice(device.id, box.checked);
    });
    label.append(box);
    label.append(el('span', {}, device.name));
    if (option.note && !option.disabled) {
      label.append(el('span', { class: 'pick-note' }, option.note));
    }
    list.append(label);
  }
  root.append(list);

  if (store.plan.touched) {
    const verdictLine =
      store.planFeasible === null
        ? 'feasibility unknown (service unreachable)'
        : store.planFeasible
          ? 'plan is feasible'
          : 'plan is not feasible';
    root.append(el('p', { class: 'plan-verdict' }, verdictLine));
    for (const finding of store.planFindings) root.append(findingBanner(finding));
  }
}

export function renderStatus(store: AppStore, root: HTMLElement): void {
  root.replaceChildren();
  if (store.gridStatus === 'stale') {
    root.append(el('span', { class: 'badge badge-stale' },
      'showing stale results; last update failed'));
  } else if (store.gridStatus === 'pending') {
    root.append(el('span', { class: 'badge' }, 'updating...'));
  } else if (store.report) {
    root.append(el('span', { class: 'badge' }, summaryLine(store.report)));
  }
  for (const error of store.fieldErrors) {
    root.append(el('span', { class: 'badge badge-error' },
      `${error.path}: ${error.message}`));
  }
}
