import { ApiClient } from './api.js';
import { AppStore } from './store.js';
import {
  renderForm,
  renderGrid,
  renderPlan,
  renderStatus,
  syncFormSelects,
} from './render.js';

const store = new AppStore(new ApiClient());

function must(id: string): HTMLElement {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing #${id}`);
  return node;
}

function renderAll(): void {
  const blocker = must('load-error');
  if (store.loadError) {
    blocker.hidden = false;
    must('load-error-message').textContent =
      `cannot reach the matching service: ${store.loadError}`;
    return;
  }
  blocker.hidden = true;
  if (!store.form) return;

  const formRoot = must('profile-form');
  if (!formRoot.hasChildNodes()) renderForm(store, formRoot);
  syncFormSelects(store, formRoot);
  renderStatus(store, must('grid-status'));
  renderGrid(store, must('device-grid'));
  renderPlan(store, must('plan-panel'));
}

store.subscribe(renderAll);

must('reset').addEventListener('click', () => {
  void store.reset();
});
must('retry').addEventListener('click', () => {
  void store.init();
});

void store.init();
