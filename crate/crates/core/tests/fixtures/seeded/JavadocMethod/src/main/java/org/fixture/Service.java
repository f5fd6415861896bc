package org.fixture;

class Service {
  public void start() {}

  public void stop() {}

  /** Pauses it. */
  public void pause() {}

  /** Coordinates the work of this component for every caller in the application. */
  public void resume() {}
}
