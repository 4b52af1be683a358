/**
 * SVG rendering of one screen.  Cell polygons are drawn exactly as stored in
 * the model; the renderer only chooses colors, stroke widths and the frame.
 */

import { ClickableScreen, clusterKey } from "./model.js";
import { clusterPositions } from "./navigation.js";

export interface RenderOptions {
  width: number;
  height: number;
  showLabels: boolean;
  showPasteRays: boolean;
  hitRadiusPx: number;
}

export const DEFAULT_OPTIONS: RenderOptions = {
  width: 720,
  height: 720,
  showLabels: true,
  showPasteRays: true,
  hitRadiusPx: 14,
};

const PALETTE = ["#cfe8ff", "#ffe3cf", "#d8f5d0", "#f5d0e8", "#fdf3c0",
                 "#d0f0f5", "#e4d8f9", "#f9d8d8"];

export interface Frame {
  minX: number;
  minY: number;
  scale: number;
  width: number;
  height: number;
}

export function frameOf(screen: ClickableScreen, width: number,
                        height: number): Frame {
  const xs: number[] = [];
  const ys: number[] = [];
  for (const s of screen.sites) {
    xs.push(s.x);
    ys.push(s.y);
  }
  for (const cell of screen.cells) {
    for (const [x, y] of cell.polygon) {
      xs.push(x);
      ys.push(y);
    }
  }
  const minX = Math.min(...xs);
  const maxX = Math.max(...xs);
  const minY = Math.min(...ys);
  const maxY = Math.max(...ys);
  const span = Math.max(maxX - minX, maxY - minY, 1e-9);
  const pad = span * 0.08;
  const scale = Math.min(width, height) / (span + 2 * pad);
  return { minX: minX - pad, minY: minY - pad, scale, width, height };
}

export function toScreen(frame: Frame, x: number, y: number): [number, number] {
  return [(x - frame.minX) * frame.scale,
          frame.height - (y - frame.minY) * frame.scale];
}

export function fromScreen(frame: Frame, px: number, py: number): [number, number] {
  return [px / frame.scale + frame.minX,
          (frame.height - py) / frame.scale + frame.minY];
}

function esc(value: string): string {
  return value.replace(/&/g, "&amp;").replace(/</g, "&lt;");
}

export function renderScreen(screen: ClickableScreen,
                             options: Partial<RenderOptions> = {}): string {
  const opts = { ...DEFAULT_OPTIONS, ...options };
  const frame = frameOf(screen, opts.width, opts.height);
  const parts: string[] = [];
  parts.push(`<svg xmlns="http://www.w3.org/2000/svg" `
    + `width="${opts.width}" height="${opts.height}" `
    + `viewBox="0 0 ${opts.width} ${opts.height}">`);

  screen.cells.forEach((cell, index) => {
    if (cell.polygon.length < 3) {
      return;
    }
    const pts = cell.polygon
      .map(([x, y]) => toScreen(frame, x, y).map((v) => v.toFixed(2)).join(","))
      .join(" ");
    const fill = PALETTE[index % PALETTE.length];
    const cls = cell.owner.length > 1 ? "cell cluster-cell" : "cell";
    parts.push(`<polygon class="${cls}" data-owner="${clusterKey(cell.owner)}" `
      + `points="${pts}" fill="${fill}" stroke="#444" stroke-width="1"/>`);
  });

  if (opts.showPasteRays) {
    const reach = Math.hypot(opts.width, opts.height);
    for (const pr of screen.paste_rays) {
      const [ax, ay] = toScreen(frame, pr.at[0], pr.at[1]);
      for (const [dx, dy] of pr.dirs) {
        const bx = ax + dx * reach;
        const by = ay - dy * reach;
        parts.push(`<line class="paste-ray" x1="${ax.toFixed(2)}" `
          + `y1="${ay.toFixed(2)}" x2="${bx.toFixed(2)}" y2="${by.toFixed(2)}" `
          + `stroke="#c33" stroke-width="1" stroke-dasharray="6 4"/>`);
      }
    }
  }

  for (const { labels, at } of clusterPositions(screen)) {
    const [cx, cy] = toScreen(frame, at[0], at[1]);
    const nontrivial = labels.length > 1;
    const cls = nontrivial ? "site cluster" : "site";
    const r = nontrivial ? 7 : 4;
    parts.push(`<circle class="${cls}" data-cluster="${clusterKey(labels)}" `
      + `cx="${cx.toFixed(2)}" cy="${cy.toFixed(2)}" r="${r}" `
      + `fill="${nontrivial ? "#c33" : "#222"}"/>`);
    if (opts.showLabels) {
      const text = nontrivial ? `{${clusterKey(labels)}}` : String(labels[0]);
      parts.push(`<text class="label" x="${(cx + 9).toFixed(2)}" `
        + `y="${(cy - 9).toFixed(2)}" font-size="13">${esc(text)}</text>`);
    }
  }

  parts.push("</svg>");
  return parts.join("\n");
}
