/** Display formatting; never changes a value, only its presentation. */

export function fmt(value: number, digits = 3): string {
  return value.toFixed(digits);
}

export function pct(value: number, digits = 0): string {
  const sign = value > 0 ? "+" : "";
  return `${sign}${value.toFixed(digits)}%`;
}
