/** Hash-routed single-page app across the three screens. */

import { clear, el } from "./dom";
import { createStore, type Screen, type Store } from "./state";
import { renderClusterView } from "./screens/clusterView";
import { renderDiscover } from "./screens/discover";
import { renderSurvey } from "./screens/survey";

const ROUTES: Record<string, Screen> = {
  "#/discover": "discover",
  "#/survey": "survey",
  "#/cluster": "cluster",
};

function hashFor(screen: Screen): string {
  return `#/${screen}`;
}

export function createApp(mount: HTMLElement, store: Store = createStore()): Store {
  let currentScreen: Screen | null = null;

  function render(): void {
    const { screen } = store.getState();
    if (screen === currentScreen) return;
    currentScreen = screen;
    if (window.location.hash !== hashFor(screen)) {
      window.location.hash = hashFor(screen);
    }
    clear(mount);
    const body = screen === "discover"
      ? renderDiscover(store)
      : screen === "survey"
        ? renderSurvey(store)
        : renderClusterView(store);
    mount.append(el("main", { class: "app" }, body));
  }

  window.addEventListener("hashchange", () => {
    const screen = ROUTES[window.location.hash];
    if (screen && screen !== store.getState().screen) {
      store.dispatch({ type: "navigate", screen });
    }
  });

  store.subscribe(render);

  const initial = ROUTES[window.location.hash];
  if (initial && initial !== store.getState().screen) {
    store.dispatch({ type: "navigate", screen: initial });
  } else {
    render();
  }
  return store;
}
