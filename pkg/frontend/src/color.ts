// Count-to-color policy for the coverage grid. Zero gets a reserved
// neutral grey; nonzero counts are ranked and the rank drives darkness,
// so a 73-vs-1 spread still uses the whole ramp instead of crushing the
// small counts into one pale band.

export const NEUTRAL = 'hsl(0, 0%, 94%)';

const HUE = 18;
const SATURATION = 64;
const TOP_LIGHTNESS = 86;

export class CountShader {
  private readonly rank = new Map<number, number>();

  constructor(counts: Iterable<number>) {
    const distinct = [...new Set([...counts].filter((c) => c > 0))].sort((a, b) => a - b);
    distinct.forEach((c, i) => this.rank.set(c, i));
  }

  /**
   * Rendered lightness for a count, lower = darker. Darkness steps through
   * ten rank deciles; a small within-decile term keeps the mapping strictly
   * decreasing even when more than ten distinct counts share the grid, so
   * color order always matches count order exactly.
   */
  lightness(count: number): number {
    if (count <= 0) return 94;
    const r = this.rank.get(count);
    if (r === undefined) throw new RangeError(`count ${count} was not in the sampled grid`);
    const x = ((r + 1) * 10) / (this.rank.size + 1);
    const decile = Math.floor(x);
    return TOP_LIGHTNESS - 5.8 * decile - 4 * (x - decile);
  }

  color(count: number): string {
    if (count <= 0) return NEUTRAL;
    return `hsl(${HUE}, ${SATURATION}%, ${this.lightness(count).toFixed(2)}%)`;
  }
}
