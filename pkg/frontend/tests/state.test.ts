/** The ViewState machine: survey arity, hover guard, single active cluster. */

import { describe, expect, it } from "vitest";

import {
  canSubmitSurvey,
  createStore,
  initialState,
  QUESTION_COUNT,
  reduce,
  type ViewState,
} from "../src/state";

function answered(state: ViewState, ...ids: string[]): ViewState {
  return ids.reduce(
    (acc, id, question) => reduce(acc, { type: "answerQuestion", question, songId: id }),
    state,
  );
}

describe("survey state machine", () => {
  it("starts with four empty answers", () => {
    expect(initialState.surveyAnswers).toHaveLength(QUESTION_COUNT);
    expect(canSubmitSurvey(initialState)).toBe(false);
  });

  it("does not advance past an unanswered question", () => {
    const blocked = reduce(initialState, { type: "surveyNext" });
    expect(blocked.surveyStep).toBe(0);
  });

  it("advances once the current question is answered", () => {
    let state = reduce(initialState, { type: "answerQuestion", question: 0, songId: "a" });
    state = reduce(state, { type: "surveyNext" });
    expect(state.surveyStep).toBe(1);
  });

  it("requires exactly four answers before submission is possible", () => {
    let state = answered(initialState, "a", "b", "c");
    expect(canSubmitSurvey(state)).toBe(false);
    state = reduce(state, { type: "answerQuestion", question: 3, songId: "d" });
    expect(canSubmitSurvey(state)).toBe(true);
  });

  it("back navigation preserves answers", () => {
    let state = answered(initialState, "a", "b");
    state = reduce(state, { type: "surveyNext" });
    state = reduce(state, { type: "surveyBack" });
    expect(state.surveyStep).toBe(0);
    expect(state.surveyAnswers.slice(0, 2)).toEqual(["a", "b"]);
  });

  it("re-answering a question replaces only that slot", () => {
    let state = answered(initialState, "a", "b", "c", "d");
    state = reduce(state, { type: "answerQuestion", question: 1, songId: "z" });
    expect(state.surveyAnswers).toEqual(["a", "z", "c", "d"]);
  });

  it("never stores more than four answers", () => {
    const state = reduce(initialState, { type: "answerQuestion", question: 7, songId: "x" });
    expect(state.surveyAnswers).toHaveLength(QUESTION_COUNT);
    expect(state.surveyAnswers.every((entry) => entry === null)).toBe(true);
  });

  it("reset clears answers but keeps the assigned cluster", () => {
    let state = answered(initialState, "a", "b", "c", "d");
    state = reduce(state, { type: "surveyAssigned", clusterId: 3 });
    state = reduce(state, { type: "resetSurvey" });
    expect(state.surveyAnswers.every((entry) => entry === null)).toBe(true);
    expect(state.assignedCluster).toBe(3);
  });
});

describe("hover guard", () => {
  it("accepts a hovered song that is rendered", () => {
    const rendered = new Set(["s1", "s2"]);
    const state = reduce(initialState, { type: "hoverSong", songId: "s1", rendered });
    expect(state.hoveredSongId).toBe("s1");
  });

  it("drops a hovered song that is not rendered", () => {
    const rendered = new Set(["s1"]);
    const state = reduce(initialState, { type: "hoverSong", songId: "ghost", rendered });
    expect(state.hoveredSongId).toBeNull();
  });

  it("clears on navigation", () => {
    let state = reduce(initialState, {
      type: "hoverSong", songId: "s1", rendered: new Set(["s1"]),
    });
    state = reduce(state, { type: "navigate", screen: "survey" });
    expect(state.hoveredSongId).toBeNull();
  });
});

describe("cluster coordination", () => {
  it("assignment activates the same cluster for all idioms", () => {
    const state = reduce(initialState, { type: "surveyAssigned", clusterId: 2 });
    expect(state.assignedCluster).toBe(2);
    expect(state.activeCluster).toBe(2);
  });

  it("legend activation moves the single active id", () => {
    let state = reduce(initialState, { type: "surveyAssigned", clusterId: 2 });
    state = reduce(state, { type: "activateCluster", clusterId: 4 });
    expect(state.activeCluster).toBe(4);
    expect(state.assignedCluster).toBe(2);
  });
});

describe("feature selection", () => {
  it("pressing a feature button also retargets the sort", () => {
    const state = reduce(initialState, { type: "selectFeature", feature: "tempo" });
    expect(state.selectedFeature).toBe("tempo");
    expect(state.sortFeature).toBe("tempo");
  });

  it("the sort dropdown changes order only", () => {
    const state = reduce(initialState, { type: "setSortFeature", feature: "energy" });
    expect(state.selectedFeature).toBe("acousticness");
    expect(state.sortFeature).toBe("energy");
  });
});

describe("store", () => {
  it("notifies subscribers once per state change", () => {
    const store = createStore();
    let notifications = 0;
    store.subscribe(() => {
      notifications += 1;
    });
    store.dispatch({ type: "selectFeature", feature: "valence" });
    store.dispatch({ type: "surveyNext" }); // no-op: nothing answered
    expect(notifications).toBe(1);
  });
});
