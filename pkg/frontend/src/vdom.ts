/**
 * Minimal virtual-node layer.
 *
 * Views are pure functions from data to VNode trees, which keeps them
 * testable without a browser: tests walk the tree and check every rendered
 * number against the service response that produced it. `mount` is the only
 * code that touches the real DOM.
 */

export interface VNode {
  tag: string;
  attrs: Record<string, string>;
  children: (VNode | string)[];
  on?: Record<string, (event: Event) => void>;
}

export function h(
  tag: string,
  attrs: Record<string, string> = {},
  children: (VNode | string)[] = [],
  on?: Record<string, (event: Event) => void>,
): VNode {
  return { tag, attrs, children, on };
}

export function mount(node: VNode | string, parent: Element): void {
  parent.appendChild(build(node));
}

export function replaceChildren(parent: Element, ...nodes: (VNode | string)[]): void {
  parent.replaceChildren(...nodes.map(build));
}

function build(node: VNode | string): Node {
  if (typeof node === "string") {
    return document.createTextNode(node);
  }
  const element = document.createElement(node.tag);
  for (const [key, value] of Object.entries(node.attrs)) {
    element.setAttribute(key, value);
  }
  if (node.on) {
    for (const [event, handler] of Object.entries(node.on)) {
      element.addEventListener(event, handler);
    }
  }
  for (const child of node.children) {
    element.appendChild(build(child));
  }
  return element;
}

/** All text content of a tree, concatenated (test helper). */
export function textOf(node: VNode | string): string {
  if (typeof node === "string") {
    return node;
  }
  return node.children.map(textOf).join(" ");
}

/** Depth-first search over a tree (test helper). */
export function findAll(node: VNode | string, predicate: (n: VNode) => boolean): VNode[] {
  if (typeof node === "string") {
    return [];
  }
  const hits = predicate(node) ? [node] : [];
  return hits.concat(node.children.flatMap((child) => findAll(child, predicate)));
}
