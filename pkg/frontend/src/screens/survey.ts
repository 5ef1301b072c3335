/** Survey screen: four questions, five songs each, over a five-band pastel
 * gradient. Picking a song from cluster j deepens band j's opacity. After the
 * fourth answer, View Results submits and navigates to the cluster view. */

import { api, ApiError } from "../api";
import { clear, el, errorBanner } from "../dom";
import { canSubmitSurvey, QUESTION_COUNT, type Store } from "../state";
import { bandOpacity } from "../theme";
import type { ClusterSummary, SurveyResponsePayload } from "../types";

export function renderSurvey(store: Store): HTMLElement {
  const root = el("section", { class: "screen survey" });
  let survey: SurveyResponsePayload | null = null;
  let clusters: ClusterSummary[] = [];
  let clusterOfOption = new Map<string, number>();
  let submitting = false;
  let submitError: string | null = null;

  const bands = el("div", { class: "survey-bands", "aria-hidden": "true" });
  const card = el("div", { class: "survey-card" });
  root.append(bands, card);

  function renderBands(): void {
    clear(bands);
    const answers = store.getState().surveyAnswers;
    for (const cluster of clusters) {
      const picks = answers.filter(
        (id) => id !== null && clusterOfOption.get(id) === cluster.id,
      ).length;
      bands.append(el("div", {
        class: "band",
        "data-cluster-id": String(cluster.id),
        "data-picks": String(picks),
        style: `background:${cluster.color};opacity:${bandOpacity(picks)}`,
      }));
    }
  }

  function renderCard(): void {
    if (!survey) return;
    const state = store.getState();
    const step = state.surveyStep;
    const question = survey.questions[step];
    clear(card);

    card.append(
      el("div", { class: "survey-progress" }, `Question ${step + 1} of ${QUESTION_COUNT}`),
      el("h1", {}, question.prompt),
      el("p", { class: "annotation" },
        "Keep an eye on the background while you answer."),
    );

    const options = el("div", { class: "options", role: "radiogroup" });
    for (const option of question.options) {
      const picked = state.surveyAnswers[step] === option.song_id;
      const button = el("button", {
        type: "button",
        class: "option" + (picked ? " picked" : ""),
        role: "radio",
        "aria-checked": picked ? "true" : "false",
        "data-song-id": option.song_id,
      },
        el("span", { class: "option-title" }, option.title),
        el("span", { class: "option-artist" }, option.artist),
      );
      button.addEventListener("click", () => {
        store.dispatch({ type: "answerQuestion", question: step, songId: option.song_id });
        renderBands();
        renderCard();
      });
      const row = el("div", { class: "option-row" }, button);
      if (option.youtube_url) {
        row.append(el("a", {
          class: "youtube-link",
          href: option.youtube_url,
          target: "_blank",
          rel: "noopener",
          title: `Listen to ${option.title}`,
          "aria-label": `Listen to ${option.title}`,
        }, "▶"));
      }
      options.append(row);
    }
    card.append(options);

    const controls = el("div", { class: "survey-controls" });
    if (step > 0) {
      const back = el("button", { type: "button", class: "secondary back" }, "Back");
      back.addEventListener("click", () => {
        store.dispatch({ type: "surveyBack" });
        renderCard();
      });
      controls.append(back);
    }
    const answered = state.surveyAnswers[step] !== null;
    if (step < QUESTION_COUNT - 1) {
      const next = el("button", { type: "button", class: "primary next" }, "Next");
      if (!answered) next.setAttribute("disabled", "");
      next.addEventListener("click", () => {
        store.dispatch({ type: "surveyNext" });
        renderCard();
      });
      controls.append(next);
    } else {
      const finish = el("button", { type: "button", class: "primary finish" }, "View Results");
      if (!canSubmitSurvey(state) || submitting) finish.setAttribute("disabled", "");
      finish.addEventListener("click", () => void submit());
      controls.append(finish);
    }
    card.append(controls);

    if (submitError !== null) {
      card.append(errorBanner(submitError, () => void submit()));
    }
  }

  async function submit(): Promise<void> {
    const answers = store.getState().surveyAnswers;
    if (!canSubmitSurvey(store.getState()) || submitting) return;
    submitting = true;
    submitError = null;
    renderCard();
    try {
      const result = await api.submitSurvey(answers as string[]);
      store.dispatch({ type: "surveyAssigned", clusterId: result.assigned_cluster });
      store.dispatch({ type: "navigate", screen: "cluster" });
    } catch (failure) {
      // answers stay in the store; the banner offers a retry
      submitError = failure instanceof ApiError ? failure.message : String(failure);
      renderCard();
    } finally {
      submitting = false;
    }
  }

  async function load(): Promise<void> {
    try {
      const [surveyBody, clustersBody] = await Promise.all([api.survey(), api.clusters()]);
      survey = surveyBody;
      clusters = clustersBody.clusters;
      clusterOfOption = new Map();
      for (const question of survey.questions) {
        for (const option of question.options) {
          clusterOfOption.set(option.song_id, option.cluster_id);
        }
      }
      renderBands();
      renderCard();
    } catch (failure) {
      clear(card);
      card.append(errorBanner((failure as Error).message, () => void load()));
    }
  }

  void load();
  return root;
}
