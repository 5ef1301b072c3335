/** Survey screen: gradient feedback, gated navigation, submit + retry. */

import { afterEach, beforeEach, describe, expect, it } from "vitest";

import { createStore, type Store } from "../src/state";
import { renderSurvey } from "../src/screens/survey";
import { bandOpacity } from "../src/theme";
import { flush, installFetchStub, PAYLOADS, type FetchStub } from "./helpers";
import type { SurveyResponsePayload, TasteResultResponse } from "../src/types";

const SURVEY = PAYLOADS["GET /api/survey"] as SurveyResponsePayload;

let stub: FetchStub;
let store: Store;
let screen: HTMLElement;

function optionFor(question: number, clusterId: number): string {
  return SURVEY.questions[question].options.find(
    (option) => option.cluster_id === clusterId,
  )!.song_id;
}

function clickOption(songId: string): void {
  (screen.querySelector(`.option[data-song-id="${songId}"]`) as HTMLButtonElement).click();
}

function clickNext(): void {
  (screen.querySelector("button.next") as HTMLButtonElement).click();
}

function band(clusterId: number): HTMLElement {
  return screen.querySelector(`.band[data-cluster-id="${clusterId}"]`) as HTMLElement;
}

beforeEach(async () => {
  stub = installFetchStub();
  store = createStore();
  store.dispatch({ type: "navigate", screen: "survey" });
  screen = renderSurvey(store);
  document.body.replaceChildren(screen);
  await flush();
});

afterEach(() => {
  stub.restore();
});

describe("layout", () => {
  it("renders five gradient bands and five options with youtube icons", () => {
    expect(screen.querySelectorAll(".band")).toHaveLength(5);
    expect(screen.querySelectorAll(".option")).toHaveLength(5);
    expect(screen.querySelectorAll(".youtube-link").length).toBeGreaterThan(0);
    expect(screen.textContent).toContain("Question 1 of 4");
  });
});

describe("gradient feedback", () => {
  it("a pick deepens its cluster's band", () => {
    expect(band(2).style.opacity).toBe(String(bandOpacity(0)));
    clickOption(optionFor(0, 2));
    expect(band(2).getAttribute("data-picks")).toBe("1");
    expect(band(2).style.opacity).toBe(String(bandOpacity(1)));
    expect(band(0).style.opacity).toBe(String(bandOpacity(0)));
  });

  it("four same-cluster picks make that band the most opaque", async () => {
    for (let question = 0; question < 4; question += 1) {
      clickOption(optionFor(question, 1));
      if (question < 3) clickNext();
      await flush(2);
    }
    expect(band(1).getAttribute("data-picks")).toBe("4");
    const opacity = Number(band(1).style.opacity);
    for (const other of [0, 2, 3, 4]) {
      expect(Number(band(other).style.opacity)).toBeLessThan(opacity);
    }
    expect(opacity).toBeLessThanOrEqual(1);
  });

  it("changing an answer moves the opacity between bands", () => {
    clickOption(optionFor(0, 2));
    clickOption(optionFor(0, 4));
    expect(band(2).getAttribute("data-picks")).toBe("0");
    expect(band(4).getAttribute("data-picks")).toBe("1");
  });
});

describe("navigation gating", () => {
  it("next is disabled until the question is answered", () => {
    const next = screen.querySelector("button.next") as HTMLButtonElement;
    expect(next.hasAttribute("disabled")).toBe(true);
    clickOption(optionFor(0, 0));
    expect(
      (screen.querySelector("button.next") as HTMLButtonElement).hasAttribute("disabled"),
    ).toBe(false);
  });

  it("back preserves the earlier answer", () => {
    const pick = optionFor(0, 3);
    clickOption(pick);
    clickNext();
    expect(screen.textContent).toContain("Question 2 of 4");
    (screen.querySelector("button.back") as HTMLButtonElement).click();
    const picked = screen.querySelector(".option.picked");
    expect(picked?.getAttribute("data-song-id")).toBe(pick);
  });

  it("view results appears on the final question and requires four answers", async () => {
    for (let question = 0; question < 3; question += 1) {
      clickOption(optionFor(question, 0));
      clickNext();
    }
    const finish = screen.querySelector("button.finish") as HTMLButtonElement;
    expect(finish).not.toBeNull();
    expect(finish.hasAttribute("disabled")).toBe(true);
    clickOption(optionFor(3, 0));
    expect(
      (screen.querySelector("button.finish") as HTMLButtonElement).hasAttribute("disabled"),
    ).toBe(false);
  });
});

describe("submission", () => {
  async function answerAll(clusterId: number): Promise<void> {
    for (let question = 0; question < 4; question += 1) {
      clickOption(optionFor(question, clusterId));
      if (question < 3) clickNext();
      await flush(2);
    }
  }

  it("posts the four picks and navigates with the server-assigned cluster", async () => {
    await answerAll(3);
    (screen.querySelector("button.finish") as HTMLButtonElement).click();
    await flush();

    const post = stub.calls.find((call) => call.method === "POST");
    expect(post).toBeDefined();
    const picks = [0, 1, 2, 3].map((q) => optionFor(q, 3));
    expect(post!.body).toEqual({ chosen_song_ids: picks });
    const recorded = PAYLOADS[
      `POST /api/survey ${JSON.stringify(picks)}`
    ] as TasteResultResponse;
    expect(store.getState().assignedCluster).toBe(recorded.assigned_cluster);
    expect(store.getState().assignedCluster).toBe(3);
    expect(store.getState().screen).toBe("cluster");
  });

  it("a failed post keeps the answers and offers a retry", async () => {
    await answerAll(2);
    stub.failNextSurveyPost();
    (screen.querySelector("button.finish") as HTMLButtonElement).click();
    await flush();

    expect(screen.querySelector(".error-banner")).not.toBeNull();
    expect(store.getState().screen).toBe("survey");
    const picks = [0, 1, 2, 3].map((q) => optionFor(q, 2));
    expect(store.getState().surveyAnswers).toEqual(picks);

    (screen.querySelector(".error-banner .retry") as HTMLButtonElement).click();
    await flush();
    expect(store.getState().screen).toBe("cluster");
    expect(store.getState().assignedCluster).toBe(2);
  });
});
