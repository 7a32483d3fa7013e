/** Demo presets: each one is a scripted scene (setup command lines) plus a
 * recorded pointer trace that exercises it. The client sends the lines
 * verbatim; whatever the trace demonstrates — moving, resizing, rotating,
 * fall-through, grouping — happens entirely server-side.
 */

export interface Preset {
  name: string;
  title: string;
  blurb: string;
  setup: string[];
  trace: string[];
}

export const PRESETS: Preset[] = [
  {
    name: "nodes",
    title: "Node shapes",
    blurb: "One-node objects: circle, rectangle, strip, and a label.",
    setup: [
      "add prim dot circle 160 180 60",
      "add prim slab rect 280 120 170 120",
      "add prim bar strip 520 140 660 220 36",
      "add label tag 330 320 one-node-each",
    ],
    trace: [
      "press 160 180 left",
      "drag 200 210",
      "release",
      "sense 320 170",
    ],
  },
  {
    name: "grouping",
    title: "Two rows of buttons",
    blurb: "Twenty equal widgets laid out in two rows; drag one off its row.",
    setup: [
      "add widget b01 70 110 60 40 0 0 0 0 movable",
      "add widget b02 140 110 60 40 0 0 0 0 movable",
      "add widget b03 210 110 60 40 0 0 0 0 movable",
      "add widget b04 280 110 60 40 0 0 0 0 movable",
      "add widget b05 350 110 60 40 0 0 0 0 movable",
      "add widget b06 420 110 60 40 0 0 0 0 movable",
      "add widget b07 490 110 60 40 0 0 0 0 movable",
      "add widget b08 560 110 60 40 0 0 0 0 movable",
      "add widget b09 630 110 60 40 0 0 0 0 movable",
      "add widget b10 700 110 60 40 0 0 0 0 movable",
      "add widget b11 70 190 60 40 0 0 0 0 movable",
      "add widget b12 140 190 60 40 0 0 0 0 movable",
      "add widget b13 210 190 60 40 0 0 0 0 movable",
      "add widget b14 280 190 60 40 0 0 0 0 movable",
      "add widget b15 350 190 60 40 0 0 0 0 movable",
      "add widget b16 420 190 60 40 0 0 0 0 movable",
      "add widget b17 490 190 60 40 0 0 0 0 movable",
      "add widget b18 560 190 60 40 0 0 0 0 movable",
      "add widget b19 630 190 60 40 0 0 0 0 movable",
      "add widget b20 700 190 60 40 0 0 0 0 movable",
    ],
    trace: [
      "press 100 110 left",
      "drag 240 320",
      "release",
    ],
  },
  {
    name: "holes",
    title: "Areas with holes",
    blurb: "Two perforated sheets stacked; a press through a hole grabs the lower one.",
    setup: [
      "add holes sheet 160 120 320 240 hole circle 240 200 40 hole poly 360 160 440 160 440 240 360 240",
      "add holes film 200 160 320 240 hole circle 320 280 50",
    ],
    trace: [
      "press 320 280 left",
      "drag 340 300",
      "release",
    ],
  },
  {
    name: "overlap",
    title: "Overlapping rectangles",
    blurb: "Two rectangles sharing an area; the front of the queue wins and paints on top.",
    setup: [
      "add rect back 140 120 260 180 any",
      "add rect front 260 200 260 180 any",
    ],
    trace: [
      "press 330 260 left",
      "drag 335 265",
      "drag 330 260",
      "release",
    ],
  },
  {
    name: "rotation",
    title: "Right-button rotation",
    blurb: "A pentagon and a strip, each turned a quarter with the right button.",
    setup: [
      "add polygon gem 240 220 90 5",
      "add strip beam 420 160 600 160 30",
    ],
    trace: [
      "press 240 220 right",
      "drag 240 300",
      "release",
      "press 540 160 right",
      "drag 510 250",
      "release",
    ],
  },
  {
    name: "rings",
    title: "Many-node covers",
    blurb: "Ring, circle-in-polygon, perforated and chatoyant polygons; drag the ring body.",
    setup: [
      "add ring halo 240 220 60 110",
      "add circleinpoly wheel 540 220 110 6 45",
      "add perforated donut 240 480 50 100 8",
      "add chatoyant spark 540 470 90 4",
    ],
    trace: [
      "press 325 220 left",
      "drag 345 240",
      "release",
    ],
  },
  {
    name: "comments",
    title: "Commented rectangle",
    blurb: "A rectangle with an inside and an outside comment; resizing re-anchors both.",
    setup: [
      "add rectc panel 160 140 240 140",
      "add comment note panel 240 180 fraction-bound",
      "add comment flag panel 430 170 edge-bound",
    ],
    trace: [
      "press 400 280 left",
      "drag 460 330",
      "release",
    ],
  },
  {
    name: "groups",
    title: "Group flavors",
    blurb: "Linked rectangles, a sizable frame group, and an elastic hull.",
    setup: [
      "add widget w1 120 120 90 54 0 0 0 0 movable",
      "add widget w2 230 120 90 54 0 0 0 0 movable",
      "group linked pair w1 w2",
      "add widget w3 420 120 90 54 60 40 180 110 movable",
      "add widget w4 530 120 90 54 60 40 180 110 movable",
      "group frame deck 400 100 240 100 200 420 80 220 w3 w4",
      "add prim pearl circle 160 320 40",
      "add rect crate 260 290 90 60 any",
      "group elastic bundle pearl crate",
    ],
    trace: [
      "press 165 147 left",
      "drag 185 167",
      "release",
      "press 640 150 left",
      "drag 700 150",
      "release",
    ],
  },
  {
    name: "selection",
    title: "Rubber-band selection",
    blurb: "A selection frame around two figures; its border drags them together.",
    setup: [
      "add prim p1 circle 160 160 30",
      "add prim p2 rect 240 140 60 40",
      "add prim p3 circle 420 300 30",
      "select 100 100 340 220",
    ],
    trace: [
      "press 120 100 left",
      "drag 140 120",
      "release",
    ],
  },
];

export function presetByName(name: string): Preset | undefined {
  return PRESETS.find((preset) => preset.name === name);
}
