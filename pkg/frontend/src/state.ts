/** Single source of truth for the three screens.
 *
 * Invariants the reducer enforces:
 * - at most 4 survey answers, one per question, and the step never advances
 *   past an unanswered question;
 * - a hovered song id must belong to the currently rendered set;
 * - the cluster view idioms all read one activeCluster id.
 */

import type { FeatureKey } from "./types";

export type Screen = "discover" | "survey" | "cluster";

export const QUESTION_COUNT = 4;

export interface ViewState {
  screen: Screen;
  selectedFeature: FeatureKey;
  sortFeature: FeatureKey;
  hoveredSongId: string | null;
  /** One slot per survey question; null until answered. */
  surveyAnswers: ReadonlyArray<string | null>;
  /** Question currently shown, 0-based. */
  surveyStep: number;
  /** Cluster id returned by the server after submitting the survey. */
  assignedCluster: number | null;
  /** Cluster the cluster-view idioms are showing right now. */
  activeCluster: number | null;
}

export const initialState: ViewState = {
  screen: "discover",
  selectedFeature: "acousticness",
  sortFeature: "acousticness",
  hoveredSongId: null,
  surveyAnswers: Array(QUESTION_COUNT).fill(null),
  surveyStep: 0,
  assignedCluster: null,
  activeCluster: null,
};

export type Action =
  | { type: "navigate"; screen: Screen }
  | { type: "selectFeature"; feature: FeatureKey }
  | { type: "setSortFeature"; feature: FeatureKey }
  | { type: "hoverSong"; songId: string | null; rendered: ReadonlySet<string> }
  | { type: "answerQuestion"; question: number; songId: string }
  | { type: "surveyNext" }
  | { type: "surveyBack" }
  | { type: "surveyAssigned"; clusterId: number }
  | { type: "activateCluster"; clusterId: number }
  | { type: "resetSurvey" };

export function canSubmitSurvey(state: ViewState): boolean {
  return state.surveyAnswers.every((answer) => answer !== null);
}

export function picksForCluster(
  answers: ReadonlyArray<string | null>,
  optionCluster: (songId: string) => number | undefined,
  clusterId: number,
): number {
  return answers.filter((id) => id !== null && optionCluster(id) === clusterId).length;
}

export function reduce(state: ViewState, action: Action): ViewState {
  switch (action.type) {
    case "navigate":
      return { ...state, screen: action.screen, hoveredSongId: null };

    case "selectFeature":
      // pressing a feature button also re-sorts the bars by that feature,
      // so one payload feeds the barplot and the top-5 table together
      return { ...state, selectedFeature: action.feature, sortFeature: action.feature };

    case "setSortFeature":
      return { ...state, sortFeature: action.feature };

    case "hoverSong": {
      if (action.songId !== null && !action.rendered.has(action.songId)) {
        return { ...state, hoveredSongId: null };
      }
      return { ...state, hoveredSongId: action.songId };
    }

    case "answerQuestion": {
      if (action.question < 0 || action.question >= QUESTION_COUNT) return state;
      const surveyAnswers = state.surveyAnswers.slice();
      surveyAnswers[action.question] = action.songId;
      return { ...state, surveyAnswers };
    }

    case "surveyNext": {
      if (state.surveyAnswers[state.surveyStep] === null) return state; // blocked
      if (state.surveyStep >= QUESTION_COUNT - 1) return state;
      return { ...state, surveyStep: state.surveyStep + 1 };
    }

    case "surveyBack":
      return { ...state, surveyStep: Math.max(0, state.surveyStep - 1) };

    case "surveyAssigned":
      return {
        ...state,
        assignedCluster: action.clusterId,
        activeCluster: action.clusterId,
      };

    case "activateCluster":
      return { ...state, activeCluster: action.clusterId };

    case "resetSurvey":
      return {
        ...state,
        surveyAnswers: Array(QUESTION_COUNT).fill(null),
        surveyStep: 0,
      };

    default:
      return state;
  }
}

export type Listener = (state: ViewState) => void;

export interface Store {
  getState(): ViewState;
  dispatch(action: Action): void;
  subscribe(listener: Listener): () => void;
}

export function createStore(start: ViewState = initialState): Store {
  let state = start;
  const listeners = new Set<Listener>();
  return {
    getState: () => state,
    dispatch(action) {
      const next = reduce(state, action);
      if (next === state) return;
      state = next;
      listeners.forEach((listener) => listener(state));
    },
    subscribe(listener) {
      listeners.add(listener);
      return () => listeners.delete(listener);
    },
  };
}
