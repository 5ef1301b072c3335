/** Small DOM/SVG helpers; no framework. */

const SVG_NS = "http://www.w3.org/2000/svg";

type Child = Node | string | null | undefined;

export function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  attrs: Record<string, string> = {},
  ...children: Child[]
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  for (const [name, value] of Object.entries(attrs)) {
    if (name === "class") node.className = value;
    else node.setAttribute(name, value);
  }
  append(node, children);
  return node;
}

export function svg(tag: string, attrs: Record<string, string> = {}, ...children: Child[]): SVGElement {
  const node = document.createElementNS(SVG_NS, tag) as SVGElement;
  for (const [name, value] of Object.entries(attrs)) {
    node.setAttribute(name, value);
  }
  append(node, children);
  return node;
}

function append(node: Element, children: Child[]): void {
  for (const child of children) {
    if (child === null || child === undefined) continue;
    node.append(typeof child === "string" ? document.createTextNode(child) : child);
  }
}

export function clear(node: Element): void {
  while (node.firstChild) node.removeChild(node.firstChild);
}

/** Visible metric text. Rendered verbatim (String(value)) so that every
 * number on screen exists in some API payload; marked for test sweeps. */
export function metric(value: number, cls = "metric"): HTMLElement {
  return el("span", { class: cls, "data-metric": "1" }, String(value));
}

export function errorBanner(message: string, onRetry?: () => void): HTMLElement {
  const banner = el("div", { class: "error-banner", role: "alert" },
    el("strong", {}, "Something went wrong. "),
    message,
  );
  if (onRetry) {
    const button = el("button", { class: "retry", type: "button" }, "Retry");
    button.addEventListener("click", onRetry);
    banner.append(" ", button);
  }
  return banner;
}
