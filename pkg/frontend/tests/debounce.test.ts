import { afterEach, beforeEach, describe, expect, it, vi } from 'vitest';

import { debounce } from '../src/debounce.js';

describe('debounce', () => {
  beforeEach(() => {
    vi.useFakeTimers();
  });
  afterEach(() => {
    vi.useRealTimers();
  });

  it('runs once on the trailing edge', () => {
    const fn = vi.fn();
    const d = debounce(fn, 150);
    d();
    d();
    d();
    expect(fn).not.toHaveBeenCalled();
    vi.advanceTimersByTime(149);
    expect(fn).not.toHaveBeenCalled();
    vi.advanceTimersByTime(1);
    expect(fn).toHaveBeenCalledTimes(1);
  });

  it('keeps only the latest arguments', () => {
    const fn = vi.fn();
    const d = debounce(fn, 150);
    d('first');
    vi.advanceTimersByTime(100);
    d('second');
    vi.advanceTimersByTime(150);
    expect(fn).toHaveBeenCalledTimes(1);
    expect(fn).toHaveBeenCalledWith('second');
  });

  it('fires again for calls after the interval', () => {
    const fn = vi.fn();
    const d = debounce(fn, 150);
    d(1);
    vi.advanceTimersByTime(150);
    d(2);
    vi.advanceTimersByTime(150);
    expect(fn.mock.calls).toEqual([[1], [2]]);
  });

  it('flush runs a pending call immediately', () => {
    const fn = vi.fn();
    const d = debounce(fn, 150);
    d('now');
    d.flush();
    expect(fn).toHaveBeenCalledWith('now');
    vi.advanceTimersByTime(300);
    expect(fn).toHaveBeenCalledTimes(1);
  });

  it('flush without a pending call is a no-op', () => {
    const fn = vi.fn();
    debounce(fn, 150).flush();
    expect(fn).not.toHaveBeenCalled();
  });

  it('cancel drops the pending call', () => {
    const fn = vi.fn();
    const d = debounce(fn, 150);
    d();
    d.cancel();
    vi.advanceTimersByTime(300);
    expect(fn).not.toHaveBeenCalled();
  });
});
