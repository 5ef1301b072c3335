/** Fixed visual constants. Cluster and feature colors come from the API;
 * these are layout and animation constants only. */

/** Base opacity of each survey gradient band. */
export const BAND_BASE_OPACITY = 0.2;

/** Added per chosen song from that band's cluster (capped at 1). */
export const BAND_OPACITY_STEP = 0.2;

export function bandOpacity(picks: number): number {
  return Math.min(1, BAND_BASE_OPACITY + BAND_OPACITY_STEP * picks);
}

export const RADAR_FILL_OPACITY = 0.35;

/** Dimming applied to bubbles outside the active cluster. */
export const BUBBLE_DIM_OPACITY = 0.25;
